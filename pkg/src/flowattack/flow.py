"""Maximum flows, Gomory-Hu (Gusfield) trees and average network flow.

Max-flow uses Dinic's algorithm on a residual network in which every
undirected edge ``(u, v)`` becomes one arc pair whose two directions both
start with capacity ``c(u, v)``. With integer capacities every augmentation
is an integer, so results are exact.
"""

import math
from collections import deque
from dataclasses import dataclass

from .graph import GraphError, connected_components, induced_subgraph


class FlowNetwork:
    """Residual network over a fixed graph, reusable across many s-t flows."""

    def __init__(self, g):
        self.order = g.nodes
        self.index = {v: k for k, v in enumerate(self.order)}
        n = len(self.order)
        self.adj = [[] for _ in range(n)]
        head = []
        cap = []
        for u, v, c in g.edges():
            iu, iv = self.index[u], self.index[v]
            self.adj[iu].append(len(head))
            head.append(iv)
            cap.append(c)
            self.adj[iv].append(len(head))
            head.append(iu)
            cap.append(c)
        self.head = head
        self.cap = cap
        self.res = list(cap)

    def _levels(self, s, t):
        n = len(self.adj)
        level = [-1] * n
        level[s] = 0
        queue = deque([s])
        adj, head, res = self.adj, self.head, self.res
        while queue:
            u = queue.popleft()
            lu = level[u] + 1
            for a in adj[u]:
                v = head[a]
                if level[v] < 0 and res[a] > 0:
                    level[v] = lu
                    if v == t:
                        return level
                    queue.append(v)
        return level if level[t] >= 0 else None

    def max_flow_index(self, s, t):
        """Max-flow between internal indices ``s`` and ``t`` (resets state)."""
        self.res = res = list(self.cap)
        adj, head = self.adj, self.head
        total = 0.0
        while True:
            level = self._levels(s, t)
            if level is None:
                return total
            ptr = [0] * len(adj)
            while True:
                # iterative DFS for one augmenting path in the level graph
                path = []
                u = s
                while u != t:
                    arcs = adj[u]
                    k = ptr[u]
                    lu = level[u] + 1
                    while k < len(arcs):
                        a = arcs[k]
                        if res[a] > 0 and level[head[a]] == lu:
                            break
                        k += 1
                    ptr[u] = k
                    if k == len(arcs):
                        if not path:
                            break
                        level[u] = -1
                        a = path.pop()
                        u = head[a ^ 1]
                        ptr[u] += 1
                        continue
                    path.append(arcs[k])
                    u = head[arcs[k]]
                if u != t:
                    break
                push = min(res[a] for a in path)
                for a in path:
                    res[a] -= push
                    res[a ^ 1] += push
                total += push

    def source_side(self, s):
        """Indices reachable from ``s`` in the residual graph of the last flow."""
        seen = [False] * len(self.adj)
        seen[s] = True
        stack = [s]
        adj, head, res = self.adj, self.head, self.res
        while stack:
            u = stack.pop()
            for a in adj[u]:
                v = head[a]
                if not seen[v] and res[a] > 0:
                    seen[v] = True
                    stack.append(v)
        return seen


def max_flow(g, s, t):
    """Maximum flow value between nodes ``s`` and ``t`` of ``g``."""
    if s == t:
        raise GraphError("source and sink must differ")
    for v in (s, t):
        if v not in g:
            raise GraphError(f"unknown node {v!r}")
    net = FlowNetwork(g)
    return net.max_flow_index(net.index[s], net.index[t])


@dataclass(frozen=True)
class GomoryHuTree:
    """Flow-equivalent tree: ``edges`` holds ``(u, v, min-cut value)``."""

    nodes: tuple
    edges: tuple

    def adjacency(self):
        adj = {v: [] for v in self.nodes}
        for u, v, w in self.edges:
            adj[u].append((v, w))
            adj[v].append((u, w))
        return adj

    def flow(self, s, t):
        """Minimum edge value on the tree path between ``s`` and ``t``."""
        if s == t:
            raise GraphError("source and sink must differ")
        adj = self.adjacency()
        best = {s: float("inf")}
        stack = [s]
        while stack:
            u = stack.pop()
            for v, w in adj[u]:
                if v not in best:
                    best[v] = min(best[u], w)
                    stack.append(v)
        return best[t]

    def all_pairs(self):
        """``{s: {t: F(s, t)}}`` for every ordered pair of distinct nodes."""
        adj = self.adjacency()
        out = {}
        for s in self.nodes:
            best = {s: float("inf")}
            stack = [s]
            while stack:
                u = stack.pop()
                for v, w in adj[u]:
                    if v not in best:
                        best[v] = min(best[u], w)
                        stack.append(v)
            del best[s]
            out[s] = best
        return out

    def pair_flow_sum(self):
        """Sum of ``F(s, t)`` over unordered pairs, in O(n log n).

        Processing tree edges from the largest value down, an edge joining
        groups of sizes ``a`` and ``b`` is the path minimum for exactly
        ``a * b`` pairs.
        """
        parent = {v: v for v in self.nodes}
        size = {v: 1 for v in self.nodes}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        total = 0.0
        for u, v, w in sorted(self.edges, key=lambda e: (-e[2], e[0], e[1])):
            ru, rv = find(u), find(v)
            total += w * size[ru] * size[rv]
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
        return total


def gomory_hu_tree(g):
    """Gusfield's construction: n-1 max-flow calls, no node contraction."""
    order = g.nodes
    n = len(order)
    if n == 0:
        raise GraphError("empty graph")
    if len(connected_components(g)) != 1:
        raise GraphError("gomory_hu_tree needs a connected graph; pass components separately")
    net = FlowNetwork(g)
    parent = [0] * n
    value = [0.0] * n
    for s in range(1, n):
        t = parent[s]
        value[s] = net.max_flow_index(s, t)
        side = net.source_side(s)
        for i in range(s + 1, n):
            if side[i] and parent[i] == t:
                parent[i] = s
    edges = tuple((order[s], order[parent[s]], value[s]) for s in range(1, n))
    return GomoryHuTree(tuple(order), edges)


def component_flow_sums(g):
    """Pair-flow sum for each connected component, keyed by its member set."""
    out = {}
    for comp in connected_components(g):
        if comp.size < 2:
            out[comp.members] = 0.0
            continue
        out[comp.members] = gomory_hu_tree(induced_subgraph(g, comp.members)).pair_flow_sum()
    return out


def anf(g, flow_sums=None):
    """Average max-flow over all unordered node pairs of ``g``.

    Pairs in different components contribute 0; graphs with fewer than two
    nodes have ANF 0. ``flow_sums`` may supply precomputed per-component
    pair-flow sums (see :func:`component_flow_sums`).
    """
    n = g.number_of_nodes()
    if n < 2:
        return 0.0
    if flow_sums is None:
        flow_sums = component_flow_sums(g)
    return 2.0 * math.fsum(flow_sums.values()) / (n * (n - 1))
