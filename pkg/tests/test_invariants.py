import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treeinv import (
    all_pairs_distances,
    delta_min_location,
    from_edge_list,
    leaves,
    path,
    profile_fast,
    profile_oracle,
    star,
    starlike,
    summarize,
)
from treeinv.verify import (
    example_tree_disjoint_middles,
    example_tree_offset_middles,
)

from helpers import all_trees_up_to, pruefer_trees, reference_distance_table


class TestAllPairsDistances:
    def test_path_three(self):
        d = all_pairs_distances(path(3))
        assert d[0][2] == 2
        assert d[0][1] == d[1][0] == 1

    def test_star_five(self):
        d = all_pairs_distances(star(5))
        assert d[1][2] == 2
        assert d[0][3] == 1

    def test_pendant_tree_far_end(self):
        # 7-path 0..6 with a pendant at 3: vertex 2 is four steps from end 6.
        t = example_tree_disjoint_middles()
        d = all_pairs_distances(t)
        assert d[2][6] == 4

    def test_symmetric_zero_diagonal(self):
        t = starlike([3, 2, 2])
        d = all_pairs_distances(t)
        assert (d == d.T).all()
        assert (np.diag(d) == 0).all()

    def test_read_only(self):
        d = all_pairs_distances(path(3))
        with pytest.raises(ValueError):
            d[0][0] = 5

    def test_matches_reference_bfs_exhaustively(self):
        for t in all_trees_up_to(8):
            assert all_pairs_distances(t).tolist() == reference_distance_table(t)

    @given(pruefer_trees(max_n=40))
    @settings(max_examples=50)
    def test_matches_reference_bfs_random(self, t):
        assert all_pairs_distances(t).tolist() == reference_distance_table(t)


class TestProfileOracle:
    def test_path_five(self):
        p = profile_oracle(path(5))
        assert p.uni == (0, 1, 2, 1, 0)
        assert p.ecc == (4, 3, 2, 3, 4)
        assert p.dsum == (10, 7, 6, 7, 10)
        assert p.delta == (4, 2, 0, 2, 4)

    def test_star_five(self):
        p = profile_oracle(star(5))
        assert p.uni[0] == 1 and p.ecc[0] == 1 and p.delta[0] == 0
        for leaf in range(1, 5):
            assert p.uni[leaf] == 0 and p.ecc[leaf] == 2 and p.delta[leaf] == 2

    def test_long_legged_spider(self):
        # Spider with legs 6, 6, 1 on 14 vertices: gap 5 at the branch vertex,
        # gap sum 104.
        p = profile_oracle(starlike([6, 6, 1]))
        assert p.delta[0] == 5
        assert sum(p.delta) == 104

    def test_single_vertex(self):
        assert profile_oracle(from_edge_list(1, [])) == profile_fast(
            from_edge_list(1, [])
        )
        p = profile_oracle(from_edge_list(1, []))
        assert p.ecc == (0,) and p.uni == (0,)


class TestFastEqualsOracle:
    def test_exhaustive_small_orders(self):
        for t in all_trees_up_to(10):
            assert profile_fast(t) == profile_oracle(t)

    @given(pruefer_trees(max_n=120))
    @settings(max_examples=60)
    def test_random_trees(self, t):
        assert profile_fast(t) == profile_oracle(t)


class TestProfileInvariants:
    @given(pruefer_trees(max_n=60))
    @settings(max_examples=60)
    def test_pointwise_relations(self, t):
        p = profile_fast(t)
        leaf_set = leaves(t)
        for v in range(t.n):
            assert p.delta[v] == p.ecc[v] - p.uni[v] >= 0
            assert (p.uni[v] == 0) == (v in leaf_set)

    @given(pruefer_trees(max_n=60))
    @settings(max_examples=60)
    def test_adjacent_values_change_by_at_most_one(self, t):
        p = profile_fast(t)
        for u, v in t.edges():
            assert abs(p.ecc[u] - p.ecc[v]) <= 1
            assert abs(p.uni[u] - p.uni[v]) <= 1

    @given(pruefer_trees(max_n=40))
    @settings(max_examples=40)
    def test_extremes_attained_at_leaves(self, t):
        table = all_pairs_distances(t)
        p = profile_oracle(t)
        leaf_set = sorted(leaves(t))
        for v in range(t.n):
            assert p.ecc[v] == max(table[v][x] for x in leaf_set)
            assert p.uni[v] == min(table[v][x] for x in leaf_set)


class TestSummarize:
    def test_pendant_tree_middle_parts_disjoint(self):
        t = example_tree_disjoint_middles()
        s = summarize(t, profile_fast(t))
        assert s.center == (3,)
        assert s.c_uni == (2, 4)
        assert not set(s.center) & set(s.c_uni)

    def test_offset_middle_parts(self):
        t = example_tree_offset_middles()
        s = summarize(t, profile_fast(t))
        assert s.center == (4, 5)
        assert s.c_uni == (3,)
        assert s.r == 5
        assert s.r_prime == 3

    @pytest.mark.parametrize("n", range(3, 21))
    def test_star_closed_forms(self, n):
        s = summarize(star(n), profile_fast(star(n)))
        assert s.ecc_sum == 2 * n - 1
        assert s.uni_sum == 1
        assert s.delta_sum == 2 * (n - 1)
        assert s.ld == 2 * n - 3

    def test_two_vertex_conventions(self):
        s = summarize(path(2), profile_fast(path(2)))
        assert s.r == 1 and s.r_prime == 0
        assert s.delta_min == 1
        assert s.center == (0, 1) and s.centroid == (0, 1)

    def test_single_vertex(self):
        t = from_edge_list(1, [])
        s = summarize(t, profile_fast(t))
        assert s.center == s.centroid == s.c_uni == (0,)
        assert s.wiener == 0 and s.diameter == 0

    @given(pruefer_trees(max_n=60))
    @settings(max_examples=60)
    def test_aggregate_identities(self, t):
        p = profile_fast(t)
        s = summarize(t, p)
        assert s.delta_sum == s.ecc_sum - s.uni_sum
        assert s.wiener * 2 == sum(p.dsum)
        assert s.r == min(p.ecc) and s.diameter == max(p.ecc)
        assert s.r_prime == max(p.uni) and s.ld == max(p.dsum)
        assert s.r >= s.r_prime
        assert s.delta_sum >= 2 * (t.n - 1)
        if t.n >= 3:
            assert s.ecc_sum >= s.ld + 2

    @given(pruefer_trees(max_n=60))
    @settings(max_examples=60)
    def test_center_and_centroid_small_and_adjacent(self, t):
        s = summarize(t, profile_fast(t))
        for part in (s.center, s.centroid):
            assert 1 <= len(part) <= 2
            if len(part) == 2:
                assert part[1] in t.adj[part[0]]


class TestDeltaMinLocation:
    def test_pendant_tree(self):
        loc = delta_min_location(example_tree_disjoint_middles())
        assert loc.delta_min == 2
        assert loc.argmin == (2, 3, 4)
        assert loc.center == (3,)
        assert loc.attained_at_center

    def test_single_center_always_attains(self):
        for t in all_trees_up_to(9):
            loc = delta_min_location(t)
            if len(loc.center) == 1:
                assert loc.attained_at_center

    def test_two_centers_within_one(self):
        for t in all_trees_up_to(9):
            if t.n < 2:
                continue
            p = profile_fast(t)
            loc = delta_min_location(t)
            if len(loc.center) == 2:
                assert min(p.delta[c] for c in loc.center) <= loc.delta_min + 1
