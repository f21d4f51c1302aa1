"""Weighted undirected simple graphs.

Every algorithm in the package reads a :class:`WeightedGraph`. Node ids are
integers that stay fixed for the lifetime of an experiment, so a removal
trace can name nodes unambiguously after any number of deletions.
"""

from dataclasses import dataclass


class GraphError(ValueError):
    """Raised on a malformed graph operation (unknown node, bad capacity)."""


class WeightedGraph:
    """Undirected graph without self-loops or parallel edges.

    Each edge carries a positive capacity ``c(i, j)`` stored as a float.
    Adding an edge that already exists keeps the larger capacity.
    """

    __slots__ = ("_adj",)

    def __init__(self, nodes=(), edges=()):
        self._adj = {}
        for v in nodes:
            self.add_node(v)
        for u, v, c in edges:
            self.add_edge(u, v, c)

    # construction ---------------------------------------------------------

    def add_node(self, v):
        self._adj.setdefault(int(v), {})

    def add_edge(self, u, v, capacity=1.0):
        u, v = int(u), int(v)
        if u == v:
            raise GraphError(f"self-loop on node {u}")
        c = float(capacity)
        if not c > 0:
            raise GraphError(f"edge ({u}, {v}) has non-positive capacity {capacity!r}")
        nu = self._adj.setdefault(u, {})
        nv = self._adj.setdefault(v, {})
        if v in nu:
            c = max(c, nu[v])
        nu[v] = c
        nv[u] = c

    def set_capacity(self, u, v, capacity):
        """Overwrite the capacity of an existing edge."""
        c = float(capacity)
        if not c > 0:
            raise GraphError(f"edge ({u}, {v}) has non-positive capacity {capacity!r}")
        if not self.has_edge(u, v):
            raise GraphError(f"no edge ({u}, {v})")
        self._adj[u][v] = c
        self._adj[v][u] = c

    def remove_edge(self, u, v):
        if not self.has_edge(u, v):
            raise GraphError(f"no edge ({u}, {v})")
        del self._adj[u][v]
        del self._adj[v][u]

    def delete_node(self, v):
        """Remove ``v`` and its incident edges in place."""
        try:
            nbrs = self._adj.pop(v)
        except KeyError:
            raise GraphError(f"unknown node {v!r}") from None
        for u in nbrs:
            del self._adj[u][v]

    def copy(self):
        g = WeightedGraph()
        g._adj = {v: dict(nbrs) for v, nbrs in self._adj.items()}
        return g

    # queries ----------------------------------------------------------------

    @property
    def nodes(self):
        """Node ids in ascending order."""
        return sorted(self._adj)

    def __contains__(self, v):
        return v in self._adj

    def __len__(self):
        return len(self._adj)

    def __iter__(self):
        return iter(sorted(self._adj))

    def number_of_nodes(self):
        return len(self._adj)

    def number_of_edges(self):
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    def has_edge(self, u, v):
        return u in self._adj and v in self._adj[u]

    def capacity(self, u, v):
        try:
            return self._adj[u][v]
        except KeyError:
            raise GraphError(f"no edge ({u}, {v})") from None

    def neighbors(self, v):
        """Mapping ``neighbor -> capacity`` for ``v`` (do not mutate)."""
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"unknown node {v!r}") from None

    def degree(self, v):
        return len(self.neighbors(v))

    def strength(self, v):
        return sum(self.neighbors(v).values())

    def edges(self):
        """Edges as ``(u, v, capacity)`` with ``u < v``, in sorted order."""
        out = []
        for u in sorted(self._adj):
            for v, c in self._adj[u].items():
                if u < v:
                    out.append((u, v, c))
        out.sort()
        return out

    def total_capacity(self):
        return sum(c for _, _, c in self.edges())

    def scaled(self, factor):
        """Copy with every capacity multiplied by ``factor``."""
        g = WeightedGraph(self._adj)
        for u, v, c in self.edges():
            g.add_edge(u, v, c * factor)
        return g

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self):
        return f"WeightedGraph(n={self.number_of_nodes()}, m={self.number_of_edges()})"


@dataclass(frozen=True)
class Component:
    members: frozenset

    @property
    def size(self):
        return len(self.members)

    def __len__(self):
        return len(self.members)


def connected_components(g):
    """Maximal connected node sets, ordered by their smallest member."""
    seen = set()
    comps = []
    for root in g.nodes:
        if root in seen:
            continue
        seen.add(root)
        stack = [root]
        members = [root]
        while stack:
            u = stack.pop()
            for v in g.neighbors(u):
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
                    members.append(v)
        comps.append(Component(frozenset(members)))
    return comps


def is_connected(g):
    return len(connected_components(g)) == 1


def remove_node(g, v):
    """Return a copy of ``g`` without ``v`` and its incident edges."""
    if v not in g:
        raise GraphError(f"unknown node {v!r}")
    h = g.copy()
    h.delete_node(v)
    return h


def largest_component_size(g):
    return max((c.size for c in connected_components(g)), default=0)


def induced_subgraph(g, nodes):
    """Subgraph on ``nodes`` with every edge of ``g`` between them."""
    keep = set(nodes)
    missing = [v for v in keep if v not in g]
    if missing:
        raise GraphError(f"unknown node(s) {sorted(missing)!r}")
    h = WeightedGraph(keep)
    for u in keep:
        for v, c in g.neighbors(u).items():
            if v in keep and u < v:
                h._adj[u][v] = c
                h._adj[v][u] = c
    return h
