"""Core graph type, Cayley construction, and neighborhood operations."""

from collections import Counter

import pytest

from ectf import (
    CapacityError,
    DistanceSetSpec,
    Graph,
    ParameterError,
    build_cayley,
    common_neighbors,
    degree_stats,
)
from ectf.graphs import bit_indices, iter_bits

from helpers import MASTER_SEED, random_maximal_triangle_free


def five_cycle() -> Graph:
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


class TestGraphType:
    def test_from_edges_basic(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2)])
        assert g.order == 3
        assert g.edge_count == 2
        assert g.adjacent(0, 1) and g.adjacent(1, 0)
        assert not g.adjacent(0, 2)
        assert list(g.edges()) == [(0, 1), (1, 2)]

    def test_rejects_self_loop(self):
        with pytest.raises(ParameterError):
            Graph.from_edges(2, [(1, 1)])
        with pytest.raises(ParameterError):
            Graph([1, 0])  # bit 0 set on row 0

    def test_rejects_asymmetric_rows(self):
        with pytest.raises(ParameterError):
            Graph([0b010, 0b000, 0b000])

    def test_rejects_out_of_range(self):
        with pytest.raises(ParameterError):
            Graph.from_edges(2, [(0, 2)])
        g = Graph.from_edges(2, [(0, 1)])
        with pytest.raises(ParameterError):
            g.row(2)
        with pytest.raises(ParameterError):
            g.row(-1)

    def test_labels_must_be_distinct_and_match_order(self):
        with pytest.raises(ParameterError):
            Graph.from_edges(2, [(0, 1)], labels=[(0,), (0,)])
        with pytest.raises(ParameterError):
            Graph.from_edges(2, [(0, 1)], labels=[(0,)])
        g = Graph.from_edges(2, [(0, 1)], labels=[(0,), (1,)])
        assert g.labels == ((0,), (1,))

    def test_capacity_limit(self):
        with pytest.raises(CapacityError):
            Graph.from_edges((1 << 15) + 1, [])

    def test_relabel(self):
        g = five_cycle()
        h = g.relabel([2, 0, 4, 1, 3])
        assert h.edge_count == g.edge_count
        assert h.adjacent(2, 0)  # image of edge (0, 1)
        assert sorted(h.degrees()) == sorted(g.degrees())

    def test_packed_matches_rows(self):
        g = random_maximal_triangle_free(70, MASTER_SEED)
        packed = g.packed()
        assert packed.shape == (70, 2)
        for v in range(70):
            val = int(packed[v, 0]) | int(packed[v, 1]) << 64
            assert val == g.row(v)

    def test_bit_helpers(self):
        assert bit_indices(0b101001) == [0, 3, 5]
        assert list(iter_bits(0)) == []


class TestBuildCayley:
    def test_spec_validation(self):
        with pytest.raises(ParameterError):
            DistanceSetSpec(0, {1})
        with pytest.raises(ParameterError):
            DistanceSetSpec(3, set())
        with pytest.raises(ParameterError):
            DistanceSetSpec(3, {0})
        with pytest.raises(ParameterError):
            DistanceSetSpec(3, {4})

    def test_single_edge(self):
        g = build_cayley(DistanceSetSpec(1, {1}))
        assert g.order == 2
        assert g.edge_count == 1
        assert g.labels == ((0,), (1,))

    def test_clebsch_parameters(self):
        g = build_cayley(DistanceSetSpec(4, {1, 4}))
        assert g.order == 16
        assert set(g.degrees()) == {5}
        assert g.edge_count == 40

    def test_distance_three_four_same_degrees(self):
        g = build_cayley(DistanceSetSpec(4, {3, 4}))
        assert g.order == 16
        assert set(g.degrees()) == {5}

    def test_capacity_error_names_limit(self):
        with pytest.raises(CapacityError, match="32768"):
            build_cayley(DistanceSetSpec(16, {1}))

    @pytest.mark.parametrize("dim,dists", [
        (1, {1}),
        (3, {1, 3}),
        (5, {2, 5}),
        (6, {3}),
        (8, {5, 6, 7, 8}),
    ])
    def test_against_naive_popcount_oracle(self, dim, dists):
        g = build_cayley(DistanceSetSpec(dim, dists))
        n = 1 << dim
        for x in range(n):
            for y in range(n):
                expected = (x != y) and (x ^ y).bit_count() in dists
                assert g.adjacent(x, y) == expected

    def test_labels_are_bit_vectors_in_numbering_order(self):
        g = build_cayley(DistanceSetSpec(3, {1}))
        assert g.labels[5] == (1, 0, 1)  # 5 = 101, coordinate 1 first
        assert g.labels[0] == (0, 0, 0)


class TestCommonNeighbors:
    def test_cycle_midpoint(self):
        g = five_cycle()
        assert common_neighbors(g, {0, 2}) == 1 << 1

    def test_clebsch_nonadjacent_pair_has_two(self):
        g = build_cayley(DistanceSetSpec(4, {1, 4}))
        pair = (0, 0b0011)  # distance 2, nonadjacent
        assert not g.adjacent(*pair)
        assert common_neighbors(g, pair).bit_count() == 2

    def test_edge_endpoints_have_none_in_triangle_free(self):
        g = Graph.from_edges(2, [(0, 1)])
        assert common_neighbors(g, {0, 1}) == 0

    def test_empty_set_gives_all_vertices(self):
        g = five_cycle()
        assert common_neighbors(g, set()) == g.full_mask

    def test_out_of_range_vertex(self):
        with pytest.raises(ParameterError):
            common_neighbors(five_cycle(), {0, 7})


class TestDegreeStats:
    def test_five_cycle(self):
        assert degree_stats(five_cycle()) == (2, 2, Counter({2: 5}))

    def test_path(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2)])
        assert degree_stats(g) == (1, 2, Counter({1: 2, 2: 1}))


class TestConstructedInvariants:
    @pytest.mark.parametrize("seed", range(5))
    def test_random_graphs_satisfy_row_invariants(self, seed):
        g = random_maximal_triangle_free(20, MASTER_SEED + seed)
        for u in range(g.order):
            assert not g.adjacent(u, u)
            for v in range(g.order):
                assert g.adjacent(u, v) == g.adjacent(v, u)
