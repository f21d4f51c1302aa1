import pytest

from flowattack.edgelist import (
    EdgeListError,
    convert_european_capacity,
    convert_grid_csv,
    load_edge_list,
    read_edge_list,
    write_edge_list,
    write_labels,
)
from flowattack.flow import max_flow

from conftest import random_connected_graph


def test_unit_triangle(tmp_path):
    p = tmp_path / "tri.csv"
    p.write_text("a,b,1\nb,c,1\nc,a,1\n")
    g, labels = load_edge_list(p)
    assert labels == {"a": 0, "b": 1, "c": 2}
    assert g.number_of_nodes() == 3 and g.number_of_edges() == 3
    assert max_flow(g, 0, 1) == 2.0


def test_header_and_blank_lines():
    g, _ = read_edge_list(["u,v,capacity", "", "1,2,2.5", "  2 , 3 , 4 "])
    assert g.edges() == [(0, 1, 2.5), (1, 2, 4.0)]


def test_duplicates_keep_max():
    g, _ = read_edge_list(["1,2,3", "2,1,7", "1,2,5"])
    assert g.capacity(0, 1) == 7.0


def test_round_trip(tmp_path):
    g = random_connected_graph(4, n_min=8, n_max=8)
    p = tmp_path / "g.csv"
    write_edge_list(g, p)
    assert p.read_text().splitlines()[0] == "u,v,capacity"
    h, labels = load_edge_list(p)
    back = {labels[str(v)]: v for v in g.nodes}
    assert sorted((min(back[u], back[v]), max(back[u], back[v]), c) for u, v, c in h.edges()) == g.edges()


def test_write_labels(tmp_path):
    p = tmp_path / "labels.csv"
    write_labels({"x": 1, "y": 0}, p)
    assert p.read_text() == "id,label\n0,y\n1,x\n"


@pytest.mark.parametrize("lines, where", [
    (["1,2,1", "1,2"], "line 2"),
    (["1,2,1", "2,3,0"], "line 2"),
    (["1,2,-4"], "line 1"),
    (["1,2,abc"], "line 1"),
    (["1,2,nan"], "line 1"),
    (["1,1,3"], "self-loop"),
    (["1,,3"], "line 1"),
])
def test_malformed(lines, where):
    with pytest.raises(EdgeListError, match=where):
        read_edge_list(lines)


@pytest.mark.parametrize("lines", [[], [""], ["u,v,capacity"]])
def test_empty(lines):
    with pytest.raises(EdgeListError, match="empty"):
        read_edge_list(lines)


@pytest.mark.parametrize("voltage, cables, cap", [(220, 1, 220.0), (500, 9, 4500.0), (380, 2, 760.0)])
def test_european_capacity(voltage, cables, cap):
    assert convert_european_capacity(voltage, cables) == cap


@pytest.mark.parametrize("voltage, cables", [(0, 1), (-220, 2), (220, 0), (220, 1.5)])
def test_european_capacity_errors(voltage, cables):
    with pytest.raises(ValueError):
        convert_european_capacity(voltage, cables)


def test_convert_grid_with_cables(tmp_path):
    raw = tmp_path / "raw.csv"
    raw.write_text("from,to,kv,circuits\nA,B,380,2\nB,C,220,1\n,C,220,1\nC,D,,1\nD,E,500,9\n")
    out = tmp_path / "eu.csv"
    assert convert_grid_csv(raw, out, "from", "to", "kv", "circuits") == (3, 2)
    assert out.read_text() == "u,v,capacity\nA,B,760\nB,C,220\nD,E,4500\n"
    g, labels = load_edge_list(out)
    assert g.capacity(labels["D"], labels["E"]) == 4500.0


def test_convert_grid_voltage_only(tmp_path):
    raw = tmp_path / "raw.csv"
    raw.write_text("a,b,voltage\nS1,S2,345\nS2,S3,138\n")
    out = tmp_path / "us.csv"
    assert convert_grid_csv(raw, out, "a", "b", "voltage") == (2, 0)
    g, _ = load_edge_list(out)
    assert g.total_capacity() == 483.0


def test_convert_grid_errors(tmp_path):
    raw = tmp_path / "raw.csv"
    raw.write_text("a,b,voltage\nS1,S2,-5\n")
    with pytest.raises(EdgeListError, match="missing"):
        convert_grid_csv(raw, tmp_path / "x.csv", "a", "b", "kv")
    with pytest.raises(EdgeListError, match="line 2"):
        convert_grid_csv(raw, tmp_path / "x.csv", "a", "b", "voltage")
