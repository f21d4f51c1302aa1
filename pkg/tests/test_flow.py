import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from flowattack.flow import anf, gomory_hu_tree, max_flow
from flowattack.graph import GraphError, WeightedGraph, remove_node

from conftest import make_graph, random_connected_graph
from oracles import all_pairs_min_cut


def test_series_bottleneck(path23):
    assert max_flow(path23, 1, 3) == 2


def test_unit_triangle_all_pairs(triangle):
    for s, t in itertools.permutations(triangle.nodes, 2):
        assert max_flow(triangle, s, t) == 2


def test_diamond():
    g = make_graph([(1, 2, 1), (1, 3, 1), (2, 4, 1), (3, 4, 1), (2, 3, 5)])
    assert max_flow(g, 1, 4) == 2
    assert all_pairs_min_cut(g)[(1, 4)] == 2


def test_disconnected_pair_is_zero():
    g = make_graph([(1, 2, 3), (3, 4, 3)])
    assert max_flow(g, 1, 4) == 0


def test_max_flow_errors(path3):
    with pytest.raises(GraphError):
        max_flow(path3, 1, 1)
    with pytest.raises(GraphError):
        max_flow(path3, 1, 99)


def test_gomory_hu_of_tree_is_itself(path23):
    tree = gomory_hu_tree(path23)
    assert sorted((min(u, v), max(u, v), w) for u, v, w in tree.edges) == [(1, 2, 2.0), (2, 3, 3.0)]


def test_gomory_hu_triangle(triangle):
    tree = gomory_hu_tree(triangle)
    assert len(tree.edges) == 2
    for s, t in itertools.combinations(triangle.nodes, 2):
        assert tree.flow(s, t) == 2


def test_gomory_hu_uses_n_minus_1_flows(monkeypatch):
    import flowattack.flow as flow

    calls = []
    orig = flow.FlowNetwork.max_flow_index

    def counting(self, s, t):
        calls.append((s, t))
        return orig(self, s, t)

    monkeypatch.setattr(flow.FlowNetwork, "max_flow_index", counting)
    g = random_connected_graph(3, n_min=9, n_max=9)
    gomory_hu_tree(g)
    assert len(calls) == 8


def test_gomory_hu_rejects_disconnected():
    with pytest.raises(GraphError):
        gomory_hu_tree(make_graph([(1, 2, 1), (3, 4, 1)]))


@pytest.mark.parametrize("seed", range(10))
def test_gomory_hu_matches_cut_enumeration(seed):
    g = random_connected_graph(seed, n_min=8, n_max=8)
    tree = gomory_hu_tree(g)
    pairs = tree.all_pairs()
    for (s, t), value in all_pairs_min_cut(g).items():
        assert pairs[s][t] == value
        assert tree.flow(s, t) == value


def test_pair_flow_sum_matches_all_pairs():
    g = random_connected_graph(7, n_min=10, n_max=10)
    tree = gomory_hu_tree(g)
    pairs = tree.all_pairs()
    assert tree.pair_flow_sum() == sum(pairs[s][t] for s, t in itertools.combinations(g.nodes, 2))


def test_anf_examples(triangle, path23):
    assert anf(triangle) == 2
    assert Fraction(anf(path23)).limit_denominator(100) == Fraction(7, 3)
    assert anf(path23) == pytest.approx(7 / 3, abs=1e-12)
    assert anf(WeightedGraph([1, 2])) == 0
    assert anf(WeightedGraph([1])) == 0
    assert anf(WeightedGraph()) == 0


def test_anf_counts_cross_component_pairs_as_zero():
    # two unit edges: 2 connected pairs with flow 1 out of 6 pairs
    g = make_graph([(1, 2, 1), (3, 4, 1)])
    assert anf(g) == pytest.approx(2 / 6, abs=1e-15)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**9))
def test_flow_properties(seed):
    g = random_connected_graph(seed, n_min=3, n_max=9)
    for s, t in itertools.combinations(g.nodes, 2):
        f = max_flow(g, s, t)
        assert f == max_flow(g, t, s)
        assert f <= g.strength(s) and f <= g.strength(t)
    base = anf(g)
    assert base > 0
    for u, v, _ in g.edges():
        h = g.copy()
        h.remove_edge(u, v)
        assert anf(h) <= base


def test_anf_can_rise_when_a_weak_leaf_is_removed():
    # Averaging over fewer pairs: deleting a cheap pendant raises the mean.
    g = make_graph([(a, b, 1) for a, b in itertools.combinations(range(4), 2)] + [(0, 4, 1)])
    assert anf(g) == pytest.approx(2.2)
    assert anf(remove_node(g, 4)) == 3


def test_anf_zero_iff_no_connected_pair():
    assert anf(WeightedGraph(range(5))) == 0
    assert anf(make_graph([(0, 1, 0.5)])) > 0
