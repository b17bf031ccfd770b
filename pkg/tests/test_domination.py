from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_tree
from zagreb_dom.domination import (
    DominatingSet,
    all_minimum_dominating_sets,
    check_pendant_lemma,
    domination_number,
    edge_partition,
    gamma_bruteforce,
    gamma_only,
    is_dominating,
)
from zagreb_dom.enumeration import enumerate_trees, prufer_decode
from zagreb_dom.errors import InstanceTooLarge, NotDominating, PreconditionViolated
from zagreb_dom.tree import from_edge_list, path_tree, spider_tree, star_tree


def naive_minimum_sets(t):
    """Every dominating set of the smallest size, by plain subset search."""
    closed = [{v, *t.adjacency[v]} for v in range(t.n)]
    everyone = set(range(t.n))
    for k in range(1, t.n + 1):
        found = [
            c for c in combinations(range(t.n), k) if set().union(*(closed[v] for v in c)) == everyone
        ]
        if found:
            return found
    return []


class TestExamples:
    def test_star(self):
        r = domination_number(star_tree(5))
        assert r.gamma == 1 and r.witness.members == (0,)

    def test_path4(self):
        r = domination_number(path_tree(4))
        assert r.gamma == 2
        assert r.witness.members == (0, 2)
        sets = [d.members for d in all_minimum_dominating_sets(path_tree(4))]
        assert (1, 2) in sets
        assert sorted(sets) == [(0, 2), (0, 3), (1, 2), (1, 3)]

    def test_path5(self):
        assert gamma_only(path_tree(5)) == 2

    def test_brute_force_limit(self):
        with pytest.raises(InstanceTooLarge):
            gamma_bruteforce(path_tree(26))


class TestAgainstBruteForce:
    @pytest.mark.parametrize("n", range(1, 13))
    def test_dp_equals_bitmask_search(self, n):
        for t in enumerate_trees(n):
            r = domination_number(t)
            assert r.gamma == gamma_bruteforce(t)
            assert len(r.witness.members) == r.gamma
            assert is_dominating(t, r.witness.members)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_all_minimum_sets(self, n):
        for t in enumerate_trees(n):
            got = [d.members for d in all_minimum_dominating_sets(t)]
            expected = naive_minimum_sets(t)
            assert got == expected
            assert domination_number(t).witness.members == expected[0]

    def test_random_medium_trees(self, rng):
        for _ in range(100):
            t = random_tree(rng.randint(13, 22), rng)
            assert gamma_only(t) == gamma_bruteforce(t)


class TestInvariants:
    @pytest.mark.parametrize("n", range(1, 31))
    def test_path_gamma(self, n):
        assert gamma_only(path_tree(n)) == -(-n // 3)

    @pytest.mark.parametrize("n", range(2, 11))
    def test_gamma_one_iff_star(self, n):
        for t in enumerate_trees(n):
            assert (gamma_only(t) == 1) == (t.max_degree == n - 1)

    @pytest.mark.parametrize("n", range(2, 13))
    def test_gamma_range(self, n):
        for t in enumerate_trees(n):
            assert 1 <= gamma_only(t) <= n // 2

    @settings(max_examples=200, deadline=None)
    @given(st.integers(2, 40).flatmap(lambda n: st.tuples(
        st.lists(st.integers(0, n - 1), min_size=max(n - 2, 0), max_size=max(n - 2, 0)),
        st.just(n),
        st.sets(st.integers(0, n - 1)),
    )))
    def test_edge_partition_counts(self, args):
        seq, n, extra = args
        t = prufer_decode(seq, n)
        r = domination_number(t)
        d = set(r.witness.members) | extra
        c = edge_partition(t, d)
        assert c.k + c.l + c.p == n - 1
        assert 2 * c.k + c.l == sum(t.degree(v) for v in d)
        assert c.l + 2 * c.p == sum(t.degree(v) for v in range(n) if v not in d)
        assert c.l >= n - len(d)
        if len(d) == r.gamma:
            assert abs(c.k - c.p) <= r.gamma - 1


class TestEdgePartition:
    def test_path4(self):
        c = edge_partition(path_tree(4), DominatingSet((1, 2)))
        assert (c.k, c.l, c.p) == (1, 2, 0)

    def test_star(self):
        c = edge_partition(star_tree(6), [0])
        assert (c.k, c.l, c.p) == (0, 5, 0)

    def test_not_dominating(self):
        with pytest.raises(NotDominating):
            edge_partition(path_tree(4), [0])


class TestPendantLemma:
    def test_spider(self):
        assert check_pendant_lemma(spider_tree([2, 2, 1]))

    def test_path7_out_of_regime(self):
        with pytest.raises(PreconditionViolated):
            check_pendant_lemma(path_tree(7))

    def test_degree_four_out_of_scope(self):
        with pytest.raises(PreconditionViolated):
            check_pendant_lemma(star_tree(5))

    def test_two_pendants_strict_case(self):
        # vertex 5 carries two leaves, so the leaf bound must hold strictly
        t = from_edge_list(9, [(0, 1), (0, 5), (0, 8), (1, 2), (1, 4), (2, 3), (5, 6), (5, 7)])
        assert gamma_only(t) == 4
        assert max(t.pendant_neighbor_counts()) == 2
        assert len(t.leaves()) > 3 * 4 - 9
        assert check_pendant_lemma(t)

    @pytest.mark.parametrize("n", range(4, 13))
    def test_holds_on_every_tree_in_scope(self, n):
        for t in enumerate_trees(n):
            g = gamma_only(t)
            if set(t.degrees) <= {1, 2, 3} and 3 * g >= n + 3 and 2 * g <= n:
                assert check_pendant_lemma(t, g)
