from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from blockgraph.graph import build_graph

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

WEIGHTS = [Fraction(0), Fraction(1), Fraction(1, 2), Fraction(-1), Fraction(2), Fraction(-3, 2)]


@st.composite
def block_graphs(draw, max_vertices=10, weights=True, min_vertices=1):
    """Connected block graphs grown clique by clique, drawn by hypothesis."""
    target = draw(st.integers(min_vertices, max_vertices))
    n, edges = 1, []
    while n < target:
        at = draw(st.integers(0, n - 1))
        m = draw(st.integers(2, min(5, target - n + 1)))
        verts = [at] + list(range(n, n + m - 1))
        edges += [(a, b) for i, a in enumerate(verts) for b in verts[i + 1:]]
        n += m - 1
    if weights:
        w = draw(st.lists(st.sampled_from(WEIGHTS), min_size=n, max_size=n))
    else:
        w = None
    return build_graph(n, edges, w)


@pytest.fixture
def k2():
    return build_graph(2, [(0, 1)])


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "ACCEPTANCE_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
