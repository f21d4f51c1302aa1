"""Edge-list files and power-grid dataset conversion.

Edge lists are comma-separated ``u,v,capacity`` lines with an optional
``u,v,capacity`` header. Node labels may be arbitrary strings; they are
remapped to dense integer ids ``0..n-1`` in order of first appearance.
"""

import csv
import math
from pathlib import Path

from .graph import WeightedGraph

EDGE_HEADER = ("u", "v", "capacity")


class EdgeListError(ValueError):
    pass


def _parse_capacity(text, lineno):
    try:
        c = float(text)
    except ValueError:
        raise EdgeListError(f"line {lineno}: capacity {text!r} is not a number") from None
    if not math.isfinite(c) or c <= 0:
        raise EdgeListError(f"line {lineno}: capacity must be a positive real, got {text!r}")
    return c


def read_edge_list(lines):
    """Parse edge-list lines; see :func:`load_edge_list`."""
    g = WeightedGraph()
    labels = {}
    seen_data = False
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(",")]
        if not seen_data and tuple(p.lower() for p in parts) == EDGE_HEADER:
            continue
        if len(parts) != 3 or not parts[0] or not parts[1]:
            raise EdgeListError(f"line {lineno}: expected 'u,v,capacity', got {line!r}")
        u, v, cap = parts
        if u == v:
            raise EdgeListError(f"line {lineno}: self-loop on {u!r}")
        c = _parse_capacity(cap, lineno)
        seen_data = True
        for label in (u, v):
            if label not in labels:
                labels[label] = len(labels)
        g.add_edge(labels[u], labels[v], c)
    if not seen_data:
        raise EdgeListError("edge list is empty")
    return g, labels


def load_edge_list(path):
    """Load ``path`` as ``(graph, labels)`` where ``labels`` maps file label -> id.

    Duplicate edges keep their largest capacity.
    """
    with open(path, newline="") as fh:
        return read_edge_list(fh)


def _format_capacity(c):
    return str(int(c)) if float(c).is_integer() else repr(float(c))


def write_edge_list(g, path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(EDGE_HEADER)
        for u, v, c in g.edges():
            w.writerow([u, v, _format_capacity(c)])


def write_labels(labels, path):
    """Write the ``id,label`` mapping produced by :func:`load_edge_list`."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["id", "label"])
        for label, idx in sorted(labels.items(), key=lambda kv: kv[1]):
            w.writerow([idx, label])


def convert_european_capacity(voltage, cables):
    """Line capacity as voltage times the number of parallel cables."""
    if not voltage > 0:
        raise ValueError(f"voltage must be positive, got {voltage!r}")
    if cables < 1 or int(cables) != cables:
        raise ValueError(f"cables must be an integer >= 1, got {cables!r}")
    return float(voltage) * int(cables)


def convert_grid_csv(src, dst, from_col, to_col, voltage_col, cables_col=None):
    """Turn a raw transmission-line table into an edge list.

    ``src`` is a CSV with a header row. Each row names the two end stations
    (``from_col``, ``to_col``) and the line voltage. When ``cables_col`` is
    given the capacity is voltage times cables, otherwise it is the voltage
    alone. Rows with a blank station or voltage are skipped. Returns
    ``(rows written, rows skipped)``.
    """
    written = skipped = 0
    with open(src, newline="") as fin, open(dst, "w", newline="") as fout:
        reader = csv.DictReader(fin)
        missing = [c for c in (from_col, to_col, voltage_col, cables_col) if c and c not in (reader.fieldnames or [])]
        if missing:
            raise EdgeListError(f"{Path(src).name}: missing column(s) {missing}")
        w = csv.writer(fout, lineterminator="\n")
        w.writerow(EDGE_HEADER)
        for lineno, row in enumerate(reader, start=2):
            u, v, volt = row[from_col].strip(), row[to_col].strip(), row[voltage_col].strip()
            if not u or not v or not volt or u == v:
                skipped += 1
                continue
            try:
                voltage = float(volt)
                cap = convert_european_capacity(voltage, int(row[cables_col])) if cables_col else voltage
            except ValueError as exc:
                raise EdgeListError(f"line {lineno}: {exc}") from None
            if cap <= 0:
                raise EdgeListError(f"line {lineno}: non-positive capacity {cap!r}")
            w.writerow([u, v, _format_capacity(cap)])
            written += 1
    return written, skipped
