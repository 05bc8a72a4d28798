from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import MN_BY_P, mixed_graphs, random_mixed
from mixedclique.bounds import (
    degeneracy,
    detect_F1,
    detect_F2,
    forest_bound,
    max_degree_rel_bound,
    outerplanar_bound,
    path_bound,
    planar_bounds,
    see_degeneracy_bound,
    verify_lemma32,
)
from mixedclique.cliques import is_relative_clique, omega_r
from mixedclique.graph import AdjacencyType, MixedGraph, SimpleGraph, named_graph, validate
from mixedclique.relations import see_graph


def star_with_helpers(m, n, leaf_codes):
    """Center 0, leaves 1..L reaching it with the given codes, and for every leaf
    pair a private helper joined by a special 2-path so the leaves see each other."""
    recs = []
    L = len(leaf_codes)
    for i, k in enumerate(leaf_codes, start=1):
        if k < n:
            recs.append(("e", i, 0, k + 1))
        else:
            c, d = divmod(k - n, 2)
            recs.append(("a", i, 0, c + 1) if d == 0 else ("a", 0, i, c + 1))
    h = L + 1
    for i, j in combinations(range(1, L + 1), 2):
        if m:
            recs += [("a", i, h, 1), ("a", h, j, 1)]
        else:
            recs += [("e", i, h, 1), ("e", h, j, 2)]
        h += 1
    G = MixedGraph(m, n, h, recs)
    assert validate(G) == []
    return G, list(range(1, L + 1))


def brute_degeneracy(U):
    best = 0
    for k in range(1, U.order + 1):
        for S in combinations(range(U.order), k):
            inside = set(S)
            best = max(best, min(len(U.adj[v] & inside) for v in S))
    return best


class TestFormulas:
    def test_planar(self):
        assert planar_bounds(2) == (15, 176)
        assert planar_bounds(3) == (31, 386)
        assert planar_bounds(4) == (53, 680)

    def test_max_degree(self):
        assert max_degree_rel_bound(2, 3) == 8
        assert max_degree_rel_bound(4, 3) == 10
        assert max_degree_rel_bound(3, 3) == 10
        assert max_degree_rel_bound(2, 0) == 1
        assert see_degeneracy_bound(2, 3) == 7

    def test_small_families(self):
        assert outerplanar_bound(2) == 7
        assert [path_bound(*mn) for mn in [(1, 0), (0, 2), (0, 3), (1, 1), (0, 1)]] == [3, 4, 4, 4, 2]
        assert [forest_bound(*mn) for mn in [(1, 0), (0, 2), (0, 3), (1, 1), (0, 1)]] == [3, 4, 4, 4, 2]

    @pytest.mark.parametrize("fn", [planar_bounds, outerplanar_bound, lambda p: max_degree_rel_bound(p, 3)])
    def test_p_below_two(self, fn):
        with pytest.raises(ValueError):
            fn(1)

    def test_bad_parameters(self):
        with pytest.raises(ValueError):
            max_degree_rel_bound(2, -1)
        with pytest.raises(ValueError):
            path_bound(0, 0)


class TestDegeneracy:
    def test_petersen(self):
        assert degeneracy(named_graph("petersen"))[0] == 3 == brute_degeneracy(named_graph("petersen"))

    def test_against_core_number(self, rng):
        for _ in range(40):
            order = rng.randint(1, 14)
            g = nx.gnp_random_graph(order, rng.random(), seed=rng.randrange(10**6))
            U = SimpleGraph(order, g.edges())
            k, elim = degeneracy(U)
            assert k == max(nx.core_number(g).values(), default=0)
            assert sorted(elim) == list(range(order))

    def test_small_brute_force(self, rng):
        for _ in range(20):
            order = rng.randint(1, 8)
            g = nx.gnp_random_graph(order, rng.random(), seed=rng.randrange(10**6))
            U = SimpleGraph(order, g.edges())
            assert degeneracy(U)[0] == brute_degeneracy(U)


class TestSeeDegeneracyBound:
    def test_random_graphs_hold(self, rng):
        for _ in range(40):
            p = rng.choice([2, 3, 4])
            m, n = rng.choice(MN_BY_P[p])
            G = random_mixed(rng, rng.randint(2, 12), m, n, density=0.5, max_degree=rng.randint(1, 5))
            rep = verify_lemma32(G)
            assert rep.holds and rep.witness is None
            assert rep.observed == degeneracy(see_graph(G).as_simple())[0]
            assert rep.p == p

    def test_report_json(self):
        rep = verify_lemma32(MixedGraph(0, 2, 3, [("e", 0, 1, 1), ("e", 1, 2, 2)]))
        doc = rep.to_json()
        assert (doc["p"], doc["delta"], doc["bound"], doc["observed"], doc["holds"]) == (2, 2, 4, 2, True)


class TestDetectors:
    def test_f1_found(self):
        G, R = star_with_helpers(1, 0, [1] * 5)
        assert is_relative_clique(G, R)
        wit = detect_F1(G, R)
        assert wit is not None and wit.center == 0 and wit.vertices == (1, 2, 3, 4, 5)
        assert wit.agreed_type == str(AdjacencyType.arc_in(1))

    def test_f1_needs_enough_agreeing(self):
        G, R = star_with_helpers(1, 0, [1] * 4)
        assert detect_F1(G, R) is None
        G, R = star_with_helpers(1, 0, [0, 1, 0, 1, 0, 1, 0, 1])
        assert detect_F1(G, R) is None

    def test_f1_picks_agreeing_group(self):
        G, R = star_with_helpers(1, 0, [0, 1, 1, 0, 1, 1, 0, 1, 0])
        wit = detect_F1(G, R)
        assert wit.center == 0 and wit.vertices == (2, 3, 5, 6, 8)

    def test_f2(self):
        codes = [i % 2 for i in range(9)]
        G, R = star_with_helpers(1, 0, codes)
        wit = detect_F2(G, R)
        assert wit.center == 0 and wit.vertices == tuple(range(1, 10))
        G, R = star_with_helpers(1, 0, codes[:8])
        assert detect_F2(G, R) is None

    def test_adjacent_leaves_are_not_independent(self):
        G, R = star_with_helpers(0, 2, [0] * 5)
        assert detect_F1(G, R).vertices == (1, 2, 3, 4, 5)
        G2 = MixedGraph(0, 2, G.order, list(G.records) + [("e", 1, 2, 2)])
        assert is_relative_clique(G2, R)
        assert detect_F1(G2, R) is None

    def test_rejects_non_clique(self):
        G = MixedGraph(0, 1, 3, [("e", 0, 1, 1), ("e", 1, 2, 1)])
        with pytest.raises(ValueError):
            detect_F1(G, [0, 2])
        with pytest.raises(ValueError):
            detect_F2(G, [0, 2])


@settings(max_examples=40, deadline=None)
@given(mixed_graphs(max_order=8, mn=(1, 0)))
def test_omega_r_within_degree_bound(G):
    if G.pairs():
        assert omega_r(G)[0] <= max_degree_rel_bound(2, G.max_degree())
