"""Independent reference computations used only by the tests.

None of these share code with the package beyond reading a graph's edges.
"""

import itertools

import numpy as np


def all_pairs_min_cut(g):
    """All-pairs min cut by enumerating every bipartition (n <= ~14).

    Returns ``{(s, t): value}`` for s < t. By max-flow/min-cut this equals
    the pairwise max flow.
    """
    order = g.nodes
    n = len(order)
    idx = {v: k for k, v in enumerate(order)}
    # node 0 is always on the "0" side, so masks range over the other n-1 bits
    masks = np.arange(1 << (n - 1), dtype=np.int64) << 1
    cut = np.zeros(len(masks))
    for u, v, c in g.edges():
        bu = (masks >> idx[u]) & 1
        bv = (masks >> idx[v]) & 1
        cut += c * (bu ^ bv)
    out = {}
    for s, t in itertools.combinations(order, 2):
        sep = ((masks >> idx[s]) & 1) != ((masks >> idx[t]) & 1)
        out[(s, t)] = float(cut[sep].min()) if sep.any() else 0.0
    return out


def brute_max_flow(g, s, t):
    return all_pairs_min_cut(g)[(min(s, t), max(s, t))]


def gauss_solve(A, b):
    """Gaussian elimination with partial pivoting on plain Python lists."""
    n = len(A)
    M = [list(map(float, row)) + [float(b[i])] for i, row in enumerate(A)]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(M[r][col]))
        M[col], M[piv] = M[piv], M[col]
        for r in range(col + 1, n):
            f = M[r][col] / M[col][col]
            for k in range(col, n + 1):
                M[r][k] -= f * M[col][k]
    x = [0.0] * n
    for r in range(n - 1, -1, -1):
        x[r] = (M[r][n] - sum(M[r][k] * x[k] for k in range(r + 1, n))) / M[r][r]
    return x


def naive_potentials(g, s, t):
    """Potentials for unit current s -> t, grounding the last node."""
    order = g.nodes
    n = len(order)
    idx = {v: k for k, v in enumerate(order)}
    L = [[0.0] * n for _ in range(n)]
    for u, v, c in g.edges():
        i, j = idx[u], idx[v]
        L[i][i] += c
        L[j][j] += c
        L[i][j] -= c
        L[j][i] -= c
    b = [0.0] * n
    b[idx[s]] += 1.0
    b[idx[t]] -= 1.0
    x = gauss_solve([row[:-1] for row in L[:-1]], b[:-1]) + [0.0]
    return {v: x[idx[v]] for v in order}


def naive_throughput(g, s, t, i):
    x = naive_potentials(g, s, t)
    return 0.5 * sum(c * abs(x[i] - x[j]) for j, c in g.neighbors(i).items())


def random_walk_betweenness(g):
    """Random-walk betweenness from the Laplacian pseudo-inverse.

    Uses the adjacency structure only (unit conductances), excludes pairs
    that contain the node and averages over (n-1)(n-2)/2 pairs.
    """
    order = g.nodes
    n = len(order)
    idx = {v: k for k, v in enumerate(order)}
    A = np.zeros((n, n))
    for u, v, _ in g.edges():
        A[idx[u], idx[v]] = A[idx[v], idx[u]] = 1.0
    T = np.linalg.pinv(np.diag(A.sum(axis=1)) - A)
    score = np.zeros(n)
    for s, t in itertools.combinations(range(n), 2):
        V = T[:, s] - T[:, t]
        flow = 0.5 * (A * np.abs(V[:, None] - V[None, :])).sum(axis=1)
        flow[[s, t]] = 0.0
        score += flow
    score *= 2.0 / ((n - 1) * (n - 2))
    return {v: float(score[idx[v]]) for v in order}
