"""SVG line charts of batch results, one chart per (model, metric)."""

import io
import re
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

from matplotlib.figure import Figure  # noqa: E402

from .centrality import CentralityKind  # noqa: E402

LABELS = {
    "ns": "NS",
    "spb": "SPB",
    "spc": "SPC",
    "fb": "FB",
    "cfb": "CFB",
    "cfc": "CFC",
}
METRIC_LABELS = {"r": "R", "tf": "R_TF", "aspl": "R_ASPL", "eff": "R_EFF", "ranf": "R_ANF"}
MARKERS = {"ns": "o", "spb": "s", "spc": "^", "fb": "D", "cfb": "v", "cfc": "P"}
KIND_ORDER = [k.value for k in CentralityKind]

matplotlib.rcParams["svg.hashsalt"] = "flowattack"
matplotlib.rcParams["svg.fonttype"] = "path"

# no creator/date block and no DTD reference, so the file is self-contained
# and its bytes do not depend on the matplotlib version
SVG_METADATA = {"Date": None, "Creator": None, "Type": None, "Format": None}
_DOCTYPE = re.compile(r"<!DOCTYPE[^>]*>\s*")


def _groups(rows):
    out = {}
    for r in rows:
        out.setdefault((r.model, r.metric), []).append(r)
    return out


def chart_path(out_dir, model, metric):
    return Path(out_dir) / f"{model}_{metric}.svg"


def plot_results(table, out_dir, allow_single_point=False):
    """Write one SVG per (model, metric) group of ``table`` into ``out_dir``.

    The x-axis is ``m`` when every row of a chart shares the same ``n``,
    otherwise the ``(n, m)`` settings in order of ``n``. A chart with a
    single x position raises unless ``allow_single_point`` is set.
    Returns the written paths.
    """
    if not table.rows:
        raise ValueError("result table is empty")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for (model, metric), rows in sorted(_groups(table.rows).items()):
        xs = sorted({(r.n, r.m) for r in rows})
        if len(xs) < 2 and not allow_single_point:
            raise ValueError(f"{model}/{metric}: only one (n, m) setting; pass allow_single_point to plot it")
        by_n = len({n for n, _ in xs}) > 1
        fig = Figure(figsize=(6.4, 4.4))
        ax = fig.add_subplot()
        kinds = sorted({r.centrality for r in rows}, key=KIND_ORDER.index)
        for kind in kinds:
            pts = sorted((xs.index((r.n, r.m)), r.mean) for r in rows if r.centrality == kind)
            (line,) = ax.plot([p[0] for p in pts], [p[1] for p in pts],
                              marker=MARKERS.get(kind, "o"), label=LABELS.get(kind, kind))
            line.set_gid(f"series-{kind}")
        ax.set_xticks(range(len(xs)))
        if by_n:
            ax.set_xticklabels([f"({n},{m})" for n, m in xs], rotation=30)
            ax.set_xlabel("(n, m)")
        else:
            ax.set_xticklabels([str(m) for _, m in xs])
            ax.set_xlabel(f"m (n = {xs[0][0]})")
        ax.set_ylabel(METRIC_LABELS.get(metric, metric))
        ax.set_title(f"{model} networks")
        ax.grid(True, alpha=0.3)
        ax.legend(fontsize="small")
        fig.tight_layout()
        path = chart_path(out_dir, model, metric)
        buf = io.StringIO()
        fig.savefig(buf, format="svg", metadata=SVG_METADATA)
        with open(path, "w", newline="\n") as fh:
            fh.write(_DOCTYPE.sub("", buf.getvalue(), count=1))
        written.append(path)
    return written
