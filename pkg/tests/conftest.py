import random

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from splitword.graph import Graph

# search times vary a lot with the drawn graph, so no per-example deadline
settings.register_profile("default", deadline=None)
settings.load_profile("default")


def named_graph(edges, isolated=()):
    """Graph from name pairs; ids follow first appearance."""
    names = []
    for u, v in edges:
        for x in (u, v):
            if x not in names:
                names.append(x)
    names += [x for x in isolated if x not in names]
    idx = {x: i for i, x in enumerate(names)}
    return Graph.from_edges(len(names), [(idx[u], idx[v]) for u, v in edges], names)


def complete(n):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def is_subword(u, w):
    it = iter(w)
    return all(x in it for x in u)


@st.composite
def split_graphs(draw, max_n=10, min_n=1):
    """Random split graphs with shuffled vertex ids."""
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(1, n))
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for a in range(k, n):
        nbhd = draw(st.sets(st.integers(0, k - 1), max_size=k))
        edges += [(a, c) for c in nbhd]
    order = draw(st.permutations(range(n)))
    return Graph.from_edges(n, [(order[u], order[v]) for u, v in edges])


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@pytest.fixture
def rng():
    return random.Random(20241016)


# criterion number -> (passed, detail), filled in by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
