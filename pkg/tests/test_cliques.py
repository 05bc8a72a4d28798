from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import brute_sees, bullet_special, mixed_graphs, random_mixed
from mixedclique._bitset import BudgetExceeded, iter_cliques_lex, lex_first_clique, max_clique_size
from mixedclique.cliques import (
    is_absolute_clique_set,
    is_mn_clique,
    is_relative_clique,
    omega_a,
    omega_r,
    omega_r_value,
)
from mixedclique.graph import MixedGraph, named_graph
from mixedclique.search import edge_color, edge_colored_graph, wagner_03


def naive_omega_r(G):
    best = []
    for k in range(G.order, 0, -1):
        for S in combinations(range(G.order), k):
            if all(brute_sees(G, a, b) for a, b in combinations(S, 2)):
                return k, list(S)
    return 0, best


def naive_absolute(G, S):
    for a, b in combinations(S, 2):
        if G.has_connection(a, b):
            continue
        if not any(bullet_special(G, a, v, b) for v in S
                   if v not in (a, b) and G.has_connection(a, v) and G.has_connection(v, b)):
            return False
    return True


def naive_omega_a(G):
    for k in range(G.order, 0, -1):
        for S in combinations(range(G.order), k):
            if naive_absolute(G, S):
                return k, list(S)
    return 0, []


def masks_of(g, order):
    masks = [0] * order
    for u, v in g.edges():
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


class TestBitset:
    def test_max_clique_against_networkx(self, rng):
        for _ in range(60):
            order = rng.randint(1, 16)
            g = nx.gnp_random_graph(order, rng.random(), seed=rng.randrange(10**6))
            masks = masks_of(g, order)
            ref = max(len(c) for c in nx.find_cliques(g))
            assert max_clique_size(masks) == ref
            assert max_clique_size(masks, floor=ref) == ref
            assert max_clique_size(masks, floor=ref + 2) == ref + 2
            lex = lex_first_clique(masks, ref)
            all_max = sorted(sorted(c) for c in nx.enumerate_all_cliques(g) if len(c) == ref)
            assert lex == all_max[0]
            assert lex_first_clique(masks, ref + 1) is None

    def test_iter_cliques_lex(self, rng):
        g = nx.gnp_random_graph(9, 0.6, seed=7)
        masks = masks_of(g, 9)
        for k in (1, 2, 3, 4):
            ref = sorted(sorted(c) for c in nx.enumerate_all_cliques(g) if len(c) == k)
            assert list(iter_cliques_lex(masks, k)) == ref

    def test_empty(self):
        assert max_clique_size([]) == 0
        assert lex_first_clique([], 0) == []


class TestRelative:
    @settings(max_examples=60, deadline=None)
    @given(mixed_graphs(max_order=7))
    def test_omega_r_matches_subset_oracle(self, G):
        k, cert = omega_r(G)
        ref_k, ref_set = naive_omega_r(G)
        assert k == ref_k == omega_r_value(G)
        assert list(cert.vertices) == ref_set
        assert cert.verify(G)

    def test_random_order_eight(self, rng):
        for _ in range(25):
            m, n = rng.choice([(1, 0), (0, 2), (1, 1), (0, 3)])
            G = random_mixed(rng, 8, m, n, density=rng.uniform(0.2, 0.6))
            assert omega_r(G)[0] == naive_omega_r(G)[0]

    def test_failing_pair(self):
        G = MixedGraph(0, 1, 3, [("e", 0, 1, 1), ("e", 1, 2, 1)])
        check = is_relative_clique(G, [0, 1, 2])
        assert not check and check.failing_pair == (0, 2)
        assert is_relative_clique(G, [0, 1])

    def test_monochrome_p3(self):
        G = MixedGraph(0, 1, 3, [("e", 0, 1, 1), ("e", 1, 2, 1)])
        assert not is_mn_clique(G)
        assert omega_r(G)[0] == 2

    def test_certificate_rejects_forgery(self):
        G = MixedGraph(0, 1, 3, [("e", 0, 1, 1), ("e", 1, 2, 1)])
        _, cert = omega_r(G)
        forged = type(cert)((0, 1, 2), {**cert.witnesses, (0, 2): 1, (1, 2): "direct"})
        assert not forged.verify(G)


class TestAbsolute:
    @settings(max_examples=60, deadline=None)
    @given(mixed_graphs(max_order=7))
    def test_omega_a_matches_subset_oracle(self, G):
        k, verts = omega_a(G)
        ref_k, ref_set = naive_omega_a(G)
        assert k == ref_k
        assert list(verts) == ref_set
        assert is_absolute_clique_set(G, verts)

    @settings(max_examples=60, deadline=None)
    @given(mixed_graphs(max_order=7))
    def test_absolute_not_above_relative(self, G):
        assert omega_a(G)[0] <= omega_r(G)[0]

    def test_helper_outside_set(self):
        # 0 and 2 see each other only through 1; {0, 2} is relative but not absolute
        G = MixedGraph(0, 2, 3, [("e", 0, 1, 1), ("e", 1, 2, 2)])
        assert is_relative_clique(G, [0, 2])
        assert not is_absolute_clique_set(G, [0, 2])
        assert is_absolute_clique_set(G, [0, 1, 2])

    def test_budget(self):
        G = edge_colored_graph(named_graph("petersen"), edge_color(named_graph("petersen"), 4), n=4)
        with pytest.raises(BudgetExceeded):
            omega_a(G, budget=0)
        assert omega_a(G)[0] == 10


def test_wagner_witness():
    G = wagner_03()
    assert is_mn_clique(G)
    assert omega_r(G)[0] == 8
    assert omega_a(G)[0] == 8
