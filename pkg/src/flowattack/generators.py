"""ER, BA and WS networks with exact node and edge counts.

The generators draw from :class:`~flowattack.rng.SplitMix64` only, so a
given spec and seed give the same graph on any platform.

Exact-``m`` rules:

* ER samples ``m`` distinct node pairs uniformly (the G(n, m) model).
* BA grows from a ``k``-clique with ``k = max(1, m // n)``: the first new node
  joins every clique node, later nodes attach to ``k`` distinct targets
  chosen proportionally to degree. The edge count is then corrected to ``m``
  by adding non-edges with both endpoints sampled by degree, or by deleting
  uniformly sampled edges.
* WS builds a ring lattice with even degree ``k = 2 * (m // n)``, adds
  ``m - n*k/2`` uniform random chords, then rewires every lattice edge
  ``(u, v)`` with probability ``p`` to ``(u, w)`` for a uniform non-neighbour
  ``w`` of ``u``.
"""

import logging
from dataclasses import dataclass
from enum import Enum

from .graph import WeightedGraph, connected_components
from .rng import SplitMix64, derive_seed

log = logging.getLogger(__name__)

MAX_CONNECT_ATTEMPTS = 100


class Model(str, Enum):
    ER = "ER"
    BA = "BA"
    WS = "WS"

    def __str__(self):
        return self.value


class InfeasibleSpec(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorSpec:
    model: Model
    n: int
    m: int
    seed: int = 0
    ws_rewire_p: float = 0.1
    connected: bool = False

    def __post_init__(self):
        object.__setattr__(self, "model", Model(str(self.model).upper()))

    def validate(self):
        if self.n < 2:
            raise InfeasibleSpec(f"n = {self.n} violates n >= 2")
        max_m = self.n * (self.n - 1) // 2
        if self.m > max_m:
            raise InfeasibleSpec(f"m = {self.m} violates m <= n(n-1)/2 = {max_m}")
        if self.m < 0:
            raise InfeasibleSpec(f"m = {self.m} violates m >= 0")
        if self.connected and self.m < self.n - 1:
            raise InfeasibleSpec(f"m = {self.m} violates m >= n-1 = {self.n - 1} for a connected graph")
        if not 0.0 <= self.ws_rewire_p <= 1.0:
            raise InfeasibleSpec(f"ws_rewire_p = {self.ws_rewire_p} violates 0 <= p <= 1")


def _uniform_non_edge(g, n, rng):
    while True:
        u = rng.randbelow(n)
        v = rng.randbelow(n)
        if u != v and not g.has_edge(u, v):
            return u, v


def erdos_renyi(n, m, rng):
    g = WeightedGraph(range(n))
    while g.number_of_edges() < m:
        u, v = _uniform_non_edge(g, n, rng)
        g.add_edge(u, v, 1.0)
    return g


def _degree_weighted(pool, rng):
    return pool[rng.randbelow(len(pool))]


def barabasi_albert(n, m, rng):
    k = max(1, m // n)
    g = WeightedGraph(range(n))
    for u in range(k):
        for v in range(u + 1, k):
            g.add_edge(u, v, 1.0)
    # each node appears once per incident edge end
    pool = []
    for u, v, _ in g.edges():
        pool += [u, v]
    for new in range(k, n):
        if new == k:
            targets = list(range(k))
        else:
            chosen = set()
            while len(chosen) < k:
                chosen.add(_degree_weighted(pool, rng))
            targets = sorted(chosen)
        for t in targets:
            g.add_edge(new, t, 1.0)
            pool += [new, t]
    max_m = n * (n - 1) // 2
    while g.number_of_edges() < m:
        if g.number_of_edges() >= max_m:
            break
        u = _degree_weighted(pool, rng)
        v = _degree_weighted(pool, rng)
        if u == v or g.has_edge(u, v):
            continue
        g.add_edge(u, v, 1.0)
        pool += [u, v]
    while g.number_of_edges() > m:
        edges = g.edges()
        u, v, _ = edges[rng.randbelow(len(edges))]
        g.remove_edge(u, v)
    return g


def watts_strogatz(n, m, p, rng):
    k = 2 * (m // n)
    g = WeightedGraph(range(n))
    lattice = []
    for u in range(n):
        for j in range(1, k // 2 + 1):
            v = (u + j) % n
            g.add_edge(u, v, 1.0)
            lattice.append((u, v))
    while g.number_of_edges() < m:
        u, v = _uniform_non_edge(g, n, rng)
        g.add_edge(u, v, 1.0)
    for u, v in lattice:
        if rng.random() >= p:
            continue
        if g.degree(u) >= n - 1:
            continue
        while True:
            w = rng.randbelow(n)
            if w != u and not g.has_edge(u, w):
                break
        g.remove_edge(u, v)
        g.add_edge(u, w, 1.0)
    return g


def _generate_once(spec, seed):
    rng = SplitMix64(seed)
    if spec.model is Model.ER:
        return erdos_renyi(spec.n, spec.m, rng)
    if spec.model is Model.BA:
        return barabasi_albert(spec.n, spec.m, rng)
    return watts_strogatz(spec.n, spec.m, spec.ws_rewire_p, rng)


def generate(spec):
    """Unit-capacity graph with exactly ``spec.n`` nodes and ``spec.m`` edges.

    With ``spec.connected`` the draw is repeated (attempt ``a`` uses seed
    ``derive_seed(spec.seed, a)`` for ``a >= 1``) until the graph is
    connected, up to ``MAX_CONNECT_ATTEMPTS`` attempts.
    """
    spec.validate()
    for attempt in range(MAX_CONNECT_ATTEMPTS):
        seed = spec.seed if attempt == 0 else derive_seed(spec.seed, attempt)
        g = _generate_once(spec, seed)
        if not spec.connected or len(connected_components(g)) == 1:
            return g
    raise InfeasibleSpec(
        f"no connected {spec.model.value} graph with n={spec.n}, m={spec.m} "
        f"after {MAX_CONNECT_ATTEMPTS} attempts"
    )


def assign_random_integer_weights(g, lo=1, hi=10, seed=0):
    """Copy of ``g`` with capacities drawn uniformly from ``{lo..hi}``.

    Edges are visited in sorted ``(u, v)`` order.
    """
    if lo < 1:
        raise ValueError(f"lo = {lo} must be at least 1")
    if lo > hi:
        raise ValueError(f"lo = {lo} exceeds hi = {hi}")
    rng = SplitMix64(seed)
    h = WeightedGraph(g.nodes)
    for u, v, _ in g.edges():
        h.add_edge(u, v, rng.randint(lo, hi))
    return h
