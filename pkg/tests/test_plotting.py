import re
import xml.etree.ElementTree as ET

import pytest

from flowattack.experiment import ResultRow, ResultTable
from flowattack.plotting import plot_results


def density_table():
    rows = []
    for kind, base in (("spc", 0.3), ("cfb", 0.2)):
        for i, m in enumerate((400, 500, 600)):
            rows.append(ResultRow("ER", 200, m, kind, "ranf", base + 0.05 * i, 0.01, 50))
    return ResultTable(rows)


def _gids(path):
    return {el.get("id") for el in ET.parse(path).iter() if el.get("id")}


def test_density_chart(tmp_path):
    (path,) = plot_results(density_table(), tmp_path)
    assert path.name == "ER_ranf.svg"
    ids = _gids(path)
    assert sorted(i for i in ids if i.startswith("series-")) == ["series-cfb", "series-spc"]
    assert len([i for i in ids if re.fullmatch(r"xtick_\d+", i)]) == 3


def test_charts_are_deterministic(tmp_path):
    a = plot_results(density_table(), tmp_path / "a")[0].read_bytes()
    b = plot_results(density_table(), tmp_path / "b")[0].read_bytes()
    assert a == b


def test_scale_chart_one_file_per_model_and_metric(tmp_path):
    rows = [ResultRow(model, n, 2 * n, "ns", metric, 0.5, 0.0, 1)
            for model in ("BA", "WS") for metric in ("r", "ranf") for n in (200, 400)]
    paths = plot_results(ResultTable(rows), tmp_path)
    assert sorted(p.name for p in paths) == ["BA_r.svg", "BA_ranf.svg", "WS_r.svg", "WS_ranf.svg"]


def test_single_point(tmp_path):
    table = ResultTable([ResultRow("ER", 50, 100, "ns", "ranf", 0.1, 0.0, 1)])
    with pytest.raises(ValueError, match="one"):
        plot_results(table, tmp_path)
    assert plot_results(table, tmp_path, allow_single_point=True)[0].exists()


def test_empty_table(tmp_path):
    with pytest.raises(ValueError, match="empty"):
        plot_results(ResultTable(), tmp_path)


def test_svg_is_self_contained(tmp_path):
    (path,) = plot_results(density_table(), tmp_path)
    text = path.read_text()
    assert "<!DOCTYPE" not in text and "<metadata" not in text
    ET.parse(path)
    # only namespace declarations may mention a URL
    refs = re.findall(r'(?:href|src|resource)="([^"#][^"]*)"', text)
    assert refs == []
