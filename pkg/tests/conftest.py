import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from mixedclique.graph import MixedGraph

ACCEPTANCE_LINES = []


def random_mixed(rng, order, m, n, density=0.5, max_degree=None):
    """Random (m,n) graph; every present pair gets a uniformly random type."""
    deg = [0] * order
    recs = []
    pairs = list(combinations(range(order), 2))
    rng.shuffle(pairs)
    for u, v in pairs:
        if rng.random() >= density:
            continue
        if max_degree is not None and (deg[u] >= max_degree or deg[v] >= max_degree):
            continue
        deg[u] += 1
        deg[v] += 1
        k = rng.randrange(2 * m + n)
        if k < n:
            recs.append(("e", u, v, k + 1))
        else:
            c = (k - n) // 2 + 1
            recs.append(("a", u, v, c) if (k - n) % 2 == 0 else ("a", v, u, c))
    return MixedGraph(m, n, order, recs)


MN_BY_P = {2: [(1, 0), (0, 2)], 3: [(1, 1), (0, 3)], 4: [(2, 0), (1, 2), (0, 4)]}


@pytest.fixture
def rng():
    return random.Random(20261014)


@st.composite
def mixed_graphs(draw, max_order=7, mn=None):
    if mn is None:
        mn = draw(st.sampled_from([(1, 0), (0, 2), (1, 1), (0, 3), (2, 0), (0, 1)]))
    m, n = mn
    order = draw(st.integers(1, max_order))
    recs = []
    for u, v in combinations(range(order), 2):
        k = draw(st.integers(-1, 2 * m + n - 1))
        if k < 0:
            continue
        if k < n:
            recs.append(("e", u, v, k + 1))
        else:
            c = (k - n) // 2 + 1
            recs.append(("a", u, v, c) if (k - n) % 2 == 0 else ("a", v, u, c))
    return MixedGraph(m, n, order, recs)


def bullet_special(G, u, v, w):
    """Special 2-path test written straight from the five-case list, on raw records."""
    def rec(a, b):
        for kind, x, y, c in G.records:
            if {x, y} == {a, b}:
                return kind, x, y, c
        return None

    r1, r2 = rec(u, v), rec(v, w)
    k1, k2 = r1[0], r2[0]
    if k1 == "e" and k2 == "e":
        return r1[3] != r2[3]
    if k1 != k2:
        return True
    uv_forward = (r1[1], r1[2]) == (u, v)
    vw_forward = (r2[1], r2[2]) == (v, w)
    if uv_forward and vw_forward:
        return True
    if (not uv_forward) and (not vw_forward):
        return True
    return r1[3] != r2[3]


def brute_sees(G, a, b):
    if G.has_connection(a, b):
        return True
    return any(bullet_special(G, a, v, b) for v in range(G.order)
               if v not in (a, b) and G.has_connection(a, v) and G.has_connection(v, b))


@pytest.fixture
def record_criterion():
    def record(label, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip()
        ACCEPTANCE_LINES.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
