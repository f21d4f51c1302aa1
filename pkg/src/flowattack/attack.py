"""Adaptive targeted node attacks.

Each round splits the surviving graph into connected components, scores
every node inside its own component, and deletes the highest-scoring node
of the whole graph. Only the component that lost a node changes, so scores
and flow sums of untouched components are reused from the previous round.
"""

import csv
import io
import logging
from dataclasses import dataclass, field

from . import centrality
from .centrality import CentralityKind
from .electrical import NumericalError
from .flow import gomory_hu_tree
from .graph import connected_components, induced_subgraph
from .rng import SplitMix64
from .robustness import SNAPSHOT_FIELDS, attack_average, fields_for, snapshot

log = logging.getLogger(__name__)

TIE_TOL = 1e-12
TRACE_HEADER = ("round", "removed_node", "centrality_value", "lcc", "tf", "aspl", "eff", "anf")


class AttackError(RuntimeError):
    def __init__(self, round_index, message):
        super().__init__(f"round {round_index}: {message}")
        self.round_index = round_index


@dataclass(frozen=True)
class LowestId:
    def __str__(self):
        return "lowest-id"


@dataclass(frozen=True)
class SeededRandom:
    seed: int

    def __str__(self):
        return f"seeded-random({self.seed})"


@dataclass(frozen=True)
class Removal:
    round: int
    node: int
    value: float
    ties: int


@dataclass
class AttackTrace:
    kind: CentralityKind
    policy: object
    distance_mode: str
    normalization: str
    n: int
    m: int
    fields: tuple
    base: object
    removals: list = field(default_factory=list)
    snapshots: list = field(default_factory=list)

    @property
    def order(self):
        return [r.node for r in self.removals]

    @property
    def tie_rounds(self):
        """Number of rounds in which more than one node shared the top score."""
        return sum(1 for r in self.removals if r.ties > 1)

    def write_csv(self, fh):
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(TRACE_HEADER)
        for rem, snap in zip(self.removals, self.snapshots):
            row = [rem.round, rem.node, repr(rem.value)]
            for name in SNAPSHOT_FIELDS:
                value = getattr(snap, name)
                row.append("" if value is None else repr(value))
            w.writerow(row)

    def to_csv(self):
        buf = io.StringIO()
        self.write_csv(buf)
        return buf.getvalue()


NORMALIZATIONS = ("network", "component")
_BETWEENNESS = {CentralityKind.SPB, CentralityKind.FB, CentralityKind.CFB}
_CLOSENESS = {CentralityKind.SPC, CentralityKind.CFC}


def cross_component_factor(kind, size, total):
    """Rescale a component-normalized score to the whole network.

    Betweenness kinds are re-averaged over all pairs of the ``total``-node
    network (pairs split across components carry nothing); closeness kinds
    take the Wasserman-Faust factor ``(size-1)/(total-1)``.
    """
    kind = CentralityKind(kind)
    if kind in _BETWEENNESS and size >= 3:
        return (size - 1) * (size - 2) / ((total - 1) * (total - 2))
    if kind in _CLOSENESS and size >= 2:
        return (size - 1) / (total - 1)
    return 1.0


def component_scores(kind, g, distance_mode="reciprocal", normalization="network", cache=None):
    """Centrality of every node of ``g``, each computed in its own component.

    With ``normalization="component"`` each score keeps its own component's
    averaging factor; ``"network"`` makes scores comparable across
    components via :func:`cross_component_factor`.
    """
    if normalization not in NORMALIZATIONS:
        raise ValueError(f"unknown normalization {normalization!r}; expected one of {NORMALIZATIONS}")
    total = g.number_of_nodes()
    scores = {}
    for comp in connected_components(g):
        part = cache.get(comp.members) if cache is not None else None
        if part is None:
            part = centrality.compute(kind, induced_subgraph(g, comp.members), distance_mode)
            if cache is not None:
                cache[comp.members] = part
        f = cross_component_factor(kind, comp.size, total) if normalization == "network" else 1.0
        for v, x in part.items():
            scores[v] = x * f
    return scores


def top_candidates(scores):
    """Nodes whose score ties the maximum at relative tolerance ``TIE_TOL``."""
    best = max(scores.values())
    floor = best - TIE_TOL * max(1.0, abs(best))
    return sorted(v for v, s in scores.items() if s >= floor)


def _flow_sums(g, cache):
    out = {}
    for comp in connected_components(g):
        if comp.members not in cache:
            if comp.size < 2:
                cache[comp.members] = 0.0
            else:
                tree = gomory_hu_tree(induced_subgraph(g, comp.members))
                cache[comp.members] = tree.pair_flow_sum()
        out[comp.members] = cache[comp.members]
    return out


def run_attack(g, kind, policy=LowestId(), metrics=None, distance_mode="reciprocal",
               normalization="network"):
    """Attack ``g`` until no node is left and record every round.

    ``metrics`` limits the per-round measurements to those needed for the
    listed metric kinds; ``None`` records every field.
    """
    kind = CentralityKind(kind)
    if g.number_of_nodes() == 0:
        raise ValueError("cannot attack an empty graph")
    wanted = SNAPSHOT_FIELDS if metrics is None else fields_for(metrics)
    rng = SplitMix64(policy.seed) if isinstance(policy, SeededRandom) else None
    work = g.copy()
    score_cache = {}
    flow_cache = {}

    def measure(graph, index):
        sums = _flow_sums(graph, flow_cache) if "anf" in wanted else None
        return snapshot(graph, index, distance_mode, wanted, flow_sums=sums)

    trace = AttackTrace(kind, policy, distance_mode, normalization, g.number_of_nodes(),
                        g.number_of_edges(), tuple(wanted), measure(work, 0))
    for r in range(1, g.number_of_nodes() + 1):
        try:
            scores = component_scores(kind, work, distance_mode, normalization, score_cache)
        except NumericalError as exc:
            raise AttackError(r, str(exc)) from exc
        cands = top_candidates(scores)
        target = cands[rng.randbelow(len(cands))] if rng is not None and len(cands) > 1 else cands[0]
        trace.removals.append(Removal(r, target, scores[target], len(cands)))
        for key in [k for k in score_cache if target in k]:
            del score_cache[key]
        for key in [k for k in flow_cache if target in k]:
            del flow_cache[key]
        work.delete_node(target)
        trace.snapshots.append(measure(work, r))
        log.debug("round %d: removed %d (%s=%r, ties=%d)", r, target, kind, scores[target], len(cands))
    return trace


def score_trace(trace, metric):
    return attack_average(trace.snapshots, trace.base, metric)
