from itertools import combinations

import pytest
from hypothesis import strategies as st

from degseq_lab.graph import graph_from_edges


def all_graphs(n):
    """Every labeled simple graph on n vertices."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield graph_from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return graph_from_edges(n, [e for e, k in zip(pairs, keep) if k])


@pytest.fixture
def k2():
    return graph_from_edges(2, [(0, 1)])


@pytest.fixture
def k3():
    return graph_from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def path3():
    return graph_from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def path4():
    return graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def star3():
    return graph_from_edges(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def c4():
    return graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def c5():
    return graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


# one "PASS/FAIL" line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
