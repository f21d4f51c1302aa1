import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from flowattack.graph import WeightedGraph  # noqa: E402

ACCEPTANCE_LINES = []


def make_graph(edges):
    return WeightedGraph(edges=edges)


def random_connected_graph(seed, n_min=2, n_max=12, lo=1, hi=10, integer=True):
    """Random connected graph: a random spanning tree plus random extra edges."""
    rnd = random.Random(seed)
    n = rnd.randint(n_min, n_max)
    g = WeightedGraph(range(n))
    cap = (lambda: rnd.randint(lo, hi)) if integer else (lambda: rnd.uniform(lo, hi))
    for v in range(1, n):
        g.add_edge(v, rnd.randrange(v), cap())
    extra = rnd.randint(0, n * (n - 1) // 2 - (n - 1))
    for _ in range(extra):
        u, v = rnd.sample(range(n), 2)
        if not g.has_edge(u, v):
            g.add_edge(u, v, cap())
    return g


@pytest.fixture
def triangle():
    return make_graph([(1, 2, 1), (2, 3, 1), (1, 3, 1)])


@pytest.fixture
def path3():
    return make_graph([(1, 2, 1), (2, 3, 1)])


@pytest.fixture
def path23():
    """Path 1-2-3 with capacities 2 and 3."""
    return make_graph([(1, 2, 2), (2, 3, 3)])


@pytest.fixture
def path4():
    return make_graph([(1, 2, 1), (2, 3, 1), (3, 4, 1)])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def replay_errors(g, trace):
    """Re-score every round of ``trace`` from scratch and list disagreements.

    Each removed node must carry the recorded score and tie the round's
    maximum within the attack's tie tolerance.
    """
    from flowattack.attack import component_scores

    errors = []
    work = g.copy()
    for rem in trace.removals:
        scores = component_scores(trace.kind, work, trace.distance_mode, trace.normalization)
        best = max(scores.values())
        got = scores[rem.node]
        if abs(got - rem.value) > 1e-12 * max(1.0, abs(got)):
            errors.append(f"round {rem.round}: recorded {rem.value!r}, replay {got!r}")
        if got < best - 1e-12 * max(1.0, abs(best)):
            errors.append(f"round {rem.round}: node {rem.node} scored {got!r} below max {best!r}")
        work.delete_node(rem.node)
    return errors
