"""Node-importance metrics for a single connected component.

Betweenness-type scores are averaged over the ``(n-1)(n-2)/2`` pairs that
exclude the node itself, with ``n`` the size of the component passed in.
Components too small to have such pairs score 0.
"""

import heapq
from enum import Enum

import numpy as np

from .electrical import GroundedLaplacian
from .flow import gomory_hu_tree
from .graph import GraphError, connected_components, induced_subgraph

DISTANCE_MODES = ("reciprocal", "direct", "unit")
_TIE_REL = 1e-12


class CentralityKind(str, Enum):
    NS = "ns"
    SPB = "spb"
    SPC = "spc"
    FB = "fb"
    CFB = "cfb"
    CFC = "cfc"

    def __str__(self):
        return self.value


def edge_length(capacity, mode):
    """Shortest-path length of an edge under the chosen distance mode."""
    if mode == "reciprocal":
        return 1.0 / capacity
    if mode == "direct":
        return capacity
    if mode == "unit":
        return 1.0
    raise ValueError(f"unknown distance mode {mode!r}; expected one of {DISTANCE_MODES}")


def _require_connected(g):
    if g.number_of_nodes() > 1 and len(connected_components(g)) != 1:
        raise GraphError("centrality is computed per connected component")


def node_strength(g):
    return {v: float(sum(g.neighbors(v).values())) for v in g.nodes}


def shortest_paths(g, s, mode):
    """Single-source distances, shortest-path counts and visit order.

    Lengths within a relative 1e-12 of each other count as equal so that
    sums like 1/2 + 1/3 and 1/3 + 1/2 tie regardless of rounding.
    """
    dist = {s: 0.0}
    sigma = {s: 1.0}
    preds = {s: []}
    done = set()
    order = []
    heap = [(0.0, s)]
    while heap:
        d, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        order.append(u)
        for v, c in g.neighbors(u).items():
            if v in done:
                continue
            nd = d + edge_length(c, mode)
            old = dist.get(v)
            if old is None or nd < old - _TIE_REL * old:
                dist[v] = nd
                sigma[v] = sigma[u]
                preds[v] = [u]
                heapq.heappush(heap, (nd, v))
            elif nd <= old + _TIE_REL * old:
                sigma[v] += sigma[u]
                preds[v].append(u)
    return dist, sigma, preds, order


def sp_betweenness(g, distance_mode="reciprocal"):
    """Shortest-path betweenness (dependency accumulation over all shortest paths)."""
    _require_connected(g)
    n = g.number_of_nodes()
    score = {v: 0.0 for v in g.nodes}
    if n < 3:
        return score
    for s in g.nodes:
        _, sigma, preds, order = shortest_paths(g, s, distance_mode)
        delta = {v: 0.0 for v in order}
        for w in reversed(order):
            for u in preds[w]:
                delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w])
            if w != s:
                score[w] += delta[w]
    # each unordered pair was accumulated from both ends
    norm = 1.0 / ((n - 1) * (n - 2))
    return {v: x * norm for v, x in score.items()}


def sp_closeness(g, distance_mode="reciprocal"):
    """(n-1) over the sum of shortest-path distances to all other nodes."""
    _require_connected(g)
    n = g.number_of_nodes()
    if n < 2:
        return {v: 0.0 for v in g.nodes}
    out = {}
    for s in g.nodes:
        dist, _, _, _ = shortest_paths(g, s, distance_mode)
        out[s] = (n - 1) / sum(dist.values())
    return out


def _flow_matrix(g, order):
    """All-pairs max-flow matrix over ``order``; 0 across components."""
    index = {v: k for k, v in enumerate(order)}
    F = np.zeros((len(order), len(order)))
    for comp in connected_components(g):
        if comp.size < 2:
            continue
        tree = gomory_hu_tree(induced_subgraph(g, comp.members))
        for s, row in tree.all_pairs().items():
            i = index[s]
            for t, f in row.items():
                F[i, index[t]] = f
    return F


def flow_betweenness(g):
    """Share of each pair's max flow lost when the node is deleted.

    The flow through ``i`` is taken as ``F_g(s, t) - F_{g-i}(s, t)``.
    """
    _require_connected(g)
    order = g.nodes
    n = len(order)
    if n < 3:
        return {v: 0.0 for v in order}
    base = _flow_matrix(g, order)
    out = {}
    for k, v in enumerate(order):
        rest = [u for u in order if u != v]
        h = g.copy()
        h.delete_node(v)
        keep = np.array([u != v for u in order])
        B = base[np.ix_(keep, keep)]
        lost = np.maximum(B - _flow_matrix(h, rest), 0.0)
        iu = np.triu_indices(n - 1, 1)
        b, d = B[iu], lost[iu]
        mask = b > 0
        out[v] = float(np.sum(d[mask] / b[mask])) * 2.0 / ((n - 1) * (n - 2))
    return out


def _pair_abs_sums(rows):
    """Sum of |x_s - x_t| over unordered pairs, for each row of ``rows``."""
    n = rows.shape[1]
    srt = np.sort(rows, axis=1)
    weights = 2.0 * np.arange(n) - (n - 1)
    return srt @ weights


def cf_betweenness(g, solver=None):
    """Current-flow betweenness with capacities read as conductances.

    One grounded-Laplacian inverse serves every source/sink pair. For an
    edge ``e = (a, b)`` the current under pair ``(s, t)`` is
    ``D_e[s] - D_e[t]`` with ``D_e = c_e (C[a] - C[b])``, so the pair sums
    reduce to sorted absolute-difference sums per edge.
    """
    _require_connected(g)
    order = g.nodes
    n = len(order)
    if n < 3:
        return {v: 0.0 for v in order}
    solver = solver or GroundedLaplacian(g)
    C = solver.inverse
    index = solver.index
    edges = g.edges()
    a = np.array([index[u] for u, _, _ in edges])
    b = np.array([index[v] for _, v, _ in edges])
    c = np.array([w for _, _, w in edges])
    D = c[:, None] * (C[a] - C[b])
    total = _pair_abs_sums(D)
    rows = np.arange(len(edges))
    via_a = total - np.abs(D - D[rows, a][:, None]).sum(axis=1)
    via_b = total - np.abs(D - D[rows, b][:, None]).sum(axis=1)
    acc = np.zeros(n)
    np.add.at(acc, a, via_a)
    np.add.at(acc, b, via_b)
    acc *= 0.5 * 2.0 / ((n - 1) * (n - 2))
    return {v: float(acc[k]) for k, v in enumerate(order)}


def cf_closeness(g, solver=None):
    """(n-1) over the summed effective resistance to all other nodes."""
    _require_connected(g)
    order = g.nodes
    n = len(order)
    if n < 2:
        return {v: 0.0 for v in order}
    solver = solver or GroundedLaplacian(g)
    R = solver.resistance_matrix()
    sums = R.sum(axis=1)
    return {v: float((n - 1) / sums[k]) for k, v in enumerate(order)}


def compute(kind, g, distance_mode="reciprocal"):
    """Scores of every node of component ``g`` under ``kind``."""
    kind = CentralityKind(kind)
    if kind is CentralityKind.NS:
        return node_strength(g)
    if kind is CentralityKind.SPB:
        return sp_betweenness(g, distance_mode)
    if kind is CentralityKind.SPC:
        return sp_closeness(g, distance_mode)
    if kind is CentralityKind.FB:
        return flow_betweenness(g)
    if kind is CentralityKind.CFB:
        return cf_betweenness(g)
    return cf_closeness(g)
