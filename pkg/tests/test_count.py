import math
import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import brute
from orient_turan.count import (
    common_in_degree,
    count_generic,
    count_kst,
    count_out_stars,
    count_pattern,
    count_profile,
    count_tt,
    count_embeddings,
)
from orient_turan.errors import InvalidInputError
from orient_turan.graphs import (
    OrientedGraph,
    Pattern,
    antidirected_complete_bipartite,
    blow_up,
    directed_cycle,
    random_oriented_graph,
    transitive_tournament,
)


def _random_graph(seed: int, n_max: int = 8) -> OrientedGraph:
    rng = random.Random(seed)
    return random_oriented_graph(rng.randint(1, n_max), rng.random(), seed)


class TestCountTT:
    def test_transitive_host_gives_binomials(self):
        for n in (1, 4, 8, 13):
            g = transitive_tournament(n)
            for r in range(1, n + 1):
                assert count_tt(g, r) == math.comb(n, r)

    def test_cycles_have_no_transitive_triple(self):
        assert count_tt(directed_cycle(3), 3) == 0
        c5 = directed_cycle(5)
        assert brute.count_tt(c5, 3) == 0
        assert count_tt(c5, 3) == 0

    def test_four_tournament_with_degrees_2211(self):
        # the 4-tournament with out-degree sequence (2,2,1,1) realises the minimum
        found = None
        for g in brute.all_oriented_graphs(4):
            if g.is_tournament() and sorted(g.out_degree(v) for v in range(4)) == [1, 1, 2, 2]:
                found = g
                break
        assert found is not None
        assert brute.count_tt(found, 3) == 2
        assert count_tt(found, 3) == 2

    def test_r_beyond_order(self):
        assert count_tt(directed_cycle(3), 4) == 0

    def test_r_below_one_rejected(self):
        with pytest.raises(InvalidInputError):
            count_tt(directed_cycle(3), 0)

    def test_against_brute_force(self):
        for seed in range(120):
            g = _random_graph(seed, n_max=7)
            for r in range(1, min(g.n, 5) + 1):
                assert count_tt(g, r) == brute.count_tt(g, r), (seed, r)


class TestCountProfile:
    def test_tt5(self):
        assert list(count_profile(transitive_tournament(5), 5)) == [5, 10, 10, 5, 1]

    def test_empty_graph(self):
        assert list(count_profile(OrientedGraph(6), 4)) == [6, 0, 0, 0]

    def test_blowup_of_cycle(self):
        g = blow_up(directed_cycle(3), (2, 2, 2))
        assert brute.profile(g, 3) == [6, 12, 0]
        assert list(count_profile(g, 3)) == [6, 12, 0]

    def test_matches_individual_counts(self):
        for seed in range(40):
            g = _random_graph(seed)
            profile = count_profile(g, 6)
            for r in range(1, 7):
                assert profile.count(r) == count_tt(g, r)

    @given(st.integers(0, 10**6))
    @settings(max_examples=50, deadline=None)
    def test_structural_invariants(self, seed):
        g = _random_graph(seed)
        profile = count_profile(g, g.n)
        assert profile.count(1) == g.n
        assert profile.count(2) == g.arc_count
        for r in range(2, g.n + 1):
            if profile.count(r - 1) == 0:
                assert profile.count(r) == 0

    def test_monotone_under_arc_deletion(self):
        for seed in range(25):
            g = _random_graph(seed + 1000)
            if g.arc_count == 0:
                continue
            before = list(count_profile(g, g.n))
            arcs = list(g.arcs())
            u, v = arcs[seed % len(arcs)]
            h = g.copy()
            h.remove_arc(u, v)
            after = list(count_profile(h, h.n))
            assert all(b <= a for b, a in zip(after, before))
            for s, t in ((1, 2), (2, 2)):
                assert count_kst(h, s, t) <= count_kst(g, s, t)


class TestOutStars:
    def test_tt3(self):
        assert count_out_stars(transitive_tournament(3), 2) == 1

    def test_hockey_stick_on_tt(self):
        for n in (4, 7, 11):
            g = transitive_tournament(n)
            for t in (1, 2, 3):
                expect = sum(math.comb(i, t) for i in range(n))
                assert expect == math.comb(n, t + 1)
                assert count_out_stars(g, t) == expect
                assert brute.count_out_stars(g, t) == expect

    def test_t_one_counts_arcs(self):
        for seed in range(10):
            g = _random_graph(seed)
            assert count_out_stars(g, 1) == g.arc_count


class TestCommonInDegree:
    def test_worked_examples(self):
        assert common_in_degree(transitive_tournament(3), {1, 2}) == 1
        assert common_in_degree(directed_cycle(3), {0, 1}) == 0
        k33 = blow_up(transitive_tournament(2), (3, 3))
        assert common_in_degree(k33, {3, 4, 5}) == 3

    def test_member_never_counted(self):
        g = transitive_tournament(6)
        assert common_in_degree(g, {5}) == 5  # everyone beats the sink, except itself

    def test_empty_set_rejected(self):
        with pytest.raises(InvalidInputError):
            common_in_degree(transitive_tournament(3), set())


class TestCountKst:
    def test_single_arc_counts_arcs(self):
        for seed in range(10):
            g = _random_graph(seed)
            assert count_kst(g, 1, 1) == g.arc_count

    def test_blowup_case(self):
        g = blow_up(transitive_tournament(2), (3, 3))
        assert brute.count_kst(g, 2, 2) == 9
        assert count_kst(g, 2, 2) == 9

    def test_tt_host_equals_out_star_count(self):
        for n in (5, 9):
            g = transitive_tournament(n)
            for t in (1, 2, 3):
                assert count_kst(g, 1, t) == count_out_stars(g, t) == math.comb(n, t + 1)

    def test_against_brute_force(self):
        for seed in range(80):
            g = _random_graph(seed, n_max=7)
            for s in (1, 2, 3):
                for t in (1, 2, 3):
                    assert count_kst(g, s, t) == brute.count_kst(g, s, t), (seed, s, t)

    def test_equals_sum_over_sink_sets(self):
        for seed in range(20):
            g = _random_graph(seed, n_max=7)
            for s, t in ((1, 2), (2, 2)):
                if t > g.n:
                    continue
                expect = sum(
                    math.comb(common_in_degree(g, sinks), s)
                    for sinks in combinations(range(g.n), t)
                )
                assert count_kst(g, s, t) == expect


class TestAverageInDegreeIdentity:
    def test_alpha_equals_total_common_in_degree(self):
        # the average-common-in-degree identity, in exact integer form
        for seed in range(30):
            g = _random_graph(seed, n_max=8)
            for t in (1, 2, 3):
                if t > g.n:
                    continue
                total = sum(
                    common_in_degree(g, sinks)
                    for sinks in combinations(range(g.n), t)
                )
                assert total == count_out_stars(g, t)

    def test_jensen_lower_bound(self):
        # alpha >= n * C(|E|/n, t) with the real-argument generalised binomial
        from orient_turan.verify import generalized_binomial

        for seed in range(30):
            g = _random_graph(seed + 500, n_max=10)
            mean_out = Fraction(g.arc_count, g.n)
            for t in (1, 2, 3):
                alpha = count_out_stars(g, t)
                assert Fraction(alpha) >= g.n * generalized_binomial(mean_out, t)


class TestGenericCounter:
    def test_tt3_equivalence(self):
        f = Pattern.tt(3)
        for seed in range(40):
            g = _random_graph(seed)
            assert count_generic(g, f) == count_tt(g, 3)

    def test_kst_equivalence(self):
        f = antidirected_complete_bipartite(2, 2)
        g = blow_up(transitive_tournament(2), (3, 3))
        assert count_generic(g, f) == 9

    def test_single_arc(self):
        f = Pattern.single_arc()
        for seed in range(10):
            g = _random_graph(seed)
            assert count_generic(g, f) == g.arc_count

    def test_pattern_larger_than_host(self):
        assert count_generic(directed_cycle(3), Pattern.tt(4)) == 0

    def test_embeddings_count_is_copies_times_automorphisms(self):
        f = antidirected_complete_bipartite(2, 2)
        g = blow_up(transitive_tournament(2), (3, 3))
        assert count_embeddings(g, f.graph) == 9 * 4

    def test_non_induced_semantics(self):
        # a transitive triangle hosts the 2-arc path even though a shortcut arc exists
        path = Pattern(OrientedGraph(3, [(0, 1), (1, 2)]))
        assert count_generic(transitive_tournament(3), path) == 1


class TestCountPatternDispatch:
    def test_routes_match_generic(self):
        patterns = [
            Pattern.tt(2),
            Pattern.tt(3),
            Pattern.tt(4),
            antidirected_complete_bipartite(1, 2),
            antidirected_complete_bipartite(2, 2),
            Pattern(directed_cycle(3)),
            Pattern(OrientedGraph(3, [(0, 1), (1, 2)])),
        ]
        for seed in range(25):
            g = _random_graph(seed, n_max=7)
            for f in patterns:
                assert count_pattern(g, f) == count_generic(g, f)
