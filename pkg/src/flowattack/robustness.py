"""Per-round network measurements and their attack-averaged scores."""

import math
from dataclasses import dataclass
from enum import Enum

from .centrality import shortest_paths
from .flow import anf as average_network_flow
from .graph import largest_component_size


class MetricKind(str, Enum):
    R_LCC = "r"
    R_TF = "tf"
    R_ASPL = "aspl"
    R_EFF = "eff"
    R_ANF = "ranf"

    def __str__(self):
        return self.value

    @property
    def field(self):
        return _FIELD[self]


_FIELD = {
    MetricKind.R_LCC: "lcc_size",
    MetricKind.R_TF: "total_flow",
    MetricKind.R_ASPL: "aspl",
    MetricKind.R_EFF: "eff",
    MetricKind.R_ANF: "anf",
}
SNAPSHOT_FIELDS = ("lcc_size", "total_flow", "aspl", "eff", "anf")


class DegenerateBaseline(ValueError):
    """The initial graph's value is 0, so per-round ratios are undefined."""


@dataclass(frozen=True)
class RoundSnapshot:
    """Measurements of the graph left after a round; ``None`` = not computed."""

    round: int
    lcc_size: int = None
    total_flow: float = None
    aspl: float = None
    eff: float = None
    anf: float = None


def path_statistics(g, distance_mode="reciprocal"):
    """``(ASPL, EFF)`` of ``g``.

    ASPL averages over connected pairs only (0 when there are none); EFF
    averages ``1/d`` over all pairs, disconnected pairs contributing 0.
    """
    n = g.number_of_nodes()
    if n < 2:
        return 0.0, 0.0
    lengths = []
    inverse = []
    for s in g.nodes:
        dist, _, _, _ = shortest_paths(g, s, distance_mode)
        for t, d in dist.items():
            if t > s:
                lengths.append(d)
                inverse.append(1.0 / d)
    aspl = math.fsum(lengths) / len(lengths) if lengths else 0.0
    eff = 2.0 * math.fsum(inverse) / (n * (n - 1))
    return aspl, eff


def snapshot(g, round_index=0, distance_mode="reciprocal", fields=SNAPSHOT_FIELDS, flow_sums=None):
    """Measure ``g``; only the names in ``fields`` are computed."""
    wanted = set(fields)
    values = {}
    if "lcc_size" in wanted:
        values["lcc_size"] = largest_component_size(g)
    if "total_flow" in wanted:
        values["total_flow"] = math.fsum(c for _, _, c in g.edges())
    if wanted & {"aspl", "eff"}:
        aspl, eff = path_statistics(g, distance_mode)
        if "aspl" in wanted:
            values["aspl"] = aspl
        if "eff" in wanted:
            values["eff"] = eff
    if "anf" in wanted:
        values["anf"] = average_network_flow(g, flow_sums)
    return RoundSnapshot(round_index, **values)


def attack_average(snapshots, base, kind):
    """Average over rounds of each round's value relative to the initial graph.

    ``R_LCC`` divides by the initial node count (the number of rounds);
    every other kind divides by the initial graph's own value.
    """
    kind = MetricKind(kind)
    n = len(snapshots)
    if n == 0:
        raise ValueError("no attack rounds")
    name = kind.field
    values = [getattr(s, name) for s in snapshots]
    if any(v is None for v in values):
        raise ValueError(f"snapshots do not carry {name!r}")
    if kind is MetricKind.R_LCC:
        denom = float(n)
    else:
        denom = getattr(base, name)
        if denom is None:
            raise ValueError(f"baseline does not carry {name!r}")
        if denom <= 0:
            raise DegenerateBaseline(f"initial graph has {name} = 0; {kind.value} is undefined")
    return math.fsum(v / denom for v in values) / n


def fields_for(metrics):
    """Snapshot fields needed to score ``metrics``."""
    return tuple(f for f in SNAPSHOT_FIELDS if f in {MetricKind(m).field for m in metrics})
