"""Capacity-as-conductance electrical model of a graph.

Each edge capacity is read as a conductance, so the edge resistance is its
reciprocal. Potentials come from the Laplacian system ``L x = b`` grounded
at the smallest node id of the component (that row and column are dropped,
which makes the system positive definite on a connected component).
"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy import linalg

from .graph import GraphError, connected_components, induced_subgraph

log = logging.getLogger(__name__)

RESIDUAL_TOL = 1e-9
CONDITION_WARN = 1e12


class NumericalError(RuntimeError):
    """A linear solve failed its residual check."""


def laplacian(g, order=None):
    """Dense conductance Laplacian of ``g`` with rows in ``order``."""
    order = g.nodes if order is None else list(order)
    index = {v: k for k, v in enumerate(order)}
    L = np.zeros((len(order), len(order)))
    for u, v, c in g.edges():
        i, j = index[u], index[v]
        L[i, j] -= c
        L[j, i] -= c
        L[i, i] += c
        L[j, j] += c
    return L


class GroundedLaplacian:
    """One factorization of a connected component's grounded Laplacian.

    ``inverse`` is the n x n matrix equal to the inverse of the grounded
    Laplacian padded with a zero row and column for the ground node, so the
    potentials for a unit current from ``s`` to ``t`` are
    ``inverse[:, s] - inverse[:, t]`` (in index space).
    """

    def __init__(self, g):
        if g.number_of_nodes() == 0:
            raise GraphError("empty graph")
        if len(connected_components(g)) != 1:
            raise GraphError("electrical solves need a connected component")
        self.graph = g
        self.order = g.nodes
        self.index = {v: k for k, v in enumerate(self.order)}
        n = len(self.order)
        self.L = laplacian(g, self.order)
        self.inverse = np.zeros((n, n))
        if n == 1:
            return
        reduced = self.L[1:, 1:]
        try:
            factor = linalg.cho_factor(reduced)
        except linalg.LinAlgError as exc:
            raise NumericalError(f"grounded Laplacian is singular: {exc}") from exc
        inv = linalg.cho_solve(factor, np.eye(n - 1))
        residual = np.abs(reduced @ inv - np.eye(n - 1)).max()
        # a pair solve is a difference of two columns
        if 2.0 * residual > RESIDUAL_TOL:
            raise NumericalError(f"Laplacian solve residual {2.0 * residual:.3e} exceeds {RESIDUAL_TOL}")
        cond = np.abs(reduced).sum(axis=0).max() * np.abs(inv).sum(axis=0).max()
        if cond > CONDITION_WARN:
            log.warning("grounded Laplacian condition number ~%.3e", cond)
        self.inverse[1:, 1:] = inv

    def potentials(self, s, t):
        """Node potentials (index space) for unit current injected at s, drawn at t."""
        i, j = self.index[s], self.index[t]
        return self.inverse[:, i] - self.inverse[:, j]

    def resistance_matrix(self):
        """Effective resistance between every pair of nodes (index space)."""
        d = np.diag(self.inverse)
        return d[:, None] + d[None, :] - 2.0 * self.inverse


@dataclass(frozen=True)
class PotentialSolution:
    graph: object
    source: int
    sink: int
    potential: dict

    def edge_current(self, i, j):
        """Current flowing from ``i`` to ``j`` along their edge."""
        return self.graph.capacity(i, j) * (self.potential[i] - self.potential[j])


def _component_of(g, s, t):
    for comp in connected_components(g):
        if s in comp.members:
            if t not in comp.members:
                raise GraphError(f"nodes {s} and {t} are in different components")
            return comp.members
    raise GraphError(f"unknown node {s!r}")


def solve_unit_current(g, s, t):
    """Potentials for a unit current entering at ``s`` and leaving at ``t``."""
    if s == t:
        raise GraphError("source and sink must differ")
    if t not in g:
        raise GraphError(f"unknown node {t!r}")
    members = _component_of(g, s, t)
    sub = induced_subgraph(g, members)
    order = sub.nodes
    index = {v: k for k, v in enumerate(order)}
    L = laplacian(sub, order)
    b = np.zeros(len(order))
    b[index[s]] = 1.0
    b[index[t]] = -1.0
    x = np.zeros(len(order))
    x[1:] = linalg.solve(L[1:, 1:], b[1:], assume_a="pos")
    residual = np.abs(L @ x - b).max()
    if residual > RESIDUAL_TOL:
        raise NumericalError(f"Laplacian solve residual {residual:.3e} exceeds {RESIDUAL_TOL}")
    return PotentialSolution(sub, s, t, {v: float(x[k]) for k, v in enumerate(order)})


def effective_resistance(g, i, v):
    """Potential difference between ``i`` and ``v`` under unit current."""
    sol = solve_unit_current(g, i, v)
    return sol.potential[i] - sol.potential[v]


def node_throughput(sol, i):
    """Current passing through ``i``: half the sum of absolute edge currents."""
    if i in (sol.source, sol.sink):
        raise GraphError("throughput is defined only for nodes other than source and sink")
    total = 0.0
    for j in sol.graph.neighbors(i):
        total += abs(sol.edge_current(i, j))
    return 0.5 * total
