"""
Tests for the grid/detour and staircase constructions and their censuses.

Core claims:
    - build_grid matches direct enumeration of b = a'a + b' incidences
    - combinatorial_graph follows the line/point rules and is injective
    - realize_geometric reproduces the rule graph exactly
    - staircase families are bipartite pseudo-segment families with the
      prescribed per-group neighborhoods
"""

from fractions import Fraction

import numpy as np
import pytest

from pseudoseg_census.constructions import (
    Choice,
    DetourChoice,
    GridIncidence,
    StaircaseParams,
    build_grid,
    combinatorial_graph,
    grid_census,
    random_grounded_family,
    realize_geometric,
    staircase_build,
    staircase_census,
    staircase_graph,
)
from pseudoseg_census.constructions.grid import integer_cbrt, integer_two_thirds
from pseudoseg_census.exceptions import BadParams, ChoiceMismatch
from pseudoseg_census.geometry import (
    intersection_graph,
    is_double_grounded,
    is_pseudosegment_family,
)
from pseudoseg_census.geometry.predicates import crossing_table


@pytest.fixture(scope='module')
def grid8():
    return build_grid(8, 2)


@pytest.fixture(scope='module')
def grid27():
    return build_grid(27, 3)


class TestBuildGrid:
    def test_grid_8_2(self, grid8):
        assert sorted(grid8.points) == [(a, b) for a in range(2) for b in range(4)]
        assert grid8.lines == ((1, 0), (1, 1))
        assert [len(row) for row in grid8.incidences] == [2, 2]
        assert grid8.total_incidences == 4

    def test_grid_27_3(self, grid27):
        assert len(grid27.points) == 27
        assert grid27.lines == tuple((s, c) for s in (1, 2) for c in range(5))
        assert all(len(row) == 3 for row in grid27.incidences)
        assert grid27.total_incidences == 30

    def test_incidence_rule(self, grid27):
        for (slope, intercept), row in zip(grid27.lines, grid27.incidences):
            for index, (a, b) in enumerate(grid27.points):
                assert (index in row) == (b == slope * a + intercept)

    @pytest.mark.parametrize("n,k", [(8, 2), (27, 3), (64, 4), (100, 4)])
    def test_size_invariants(self, n, k):
        grid = build_grid(n, k)
        r1, r2 = integer_cbrt(n), integer_two_thirds(n)
        assert len(grid.points) == r1 * r2 <= n
        assert len(grid.lines) == (k - 1) * -(-r2 // 2)
        assert all(4 * len(row) >= r1 for row in grid.incidences)

    def test_grid_64_4_incidences(self):
        grid = build_grid(64, 4)
        assert min(len(row) for row in grid.incidences) == 3
        assert grid.total_incidences == 95

    @pytest.mark.parametrize("n,k", [(8, 3), (7, 1), (27, 0)])
    def test_bad_params(self, n, k):
        with pytest.raises(BadParams):
            build_grid(n, k)

    def test_labels(self, grid8):
        assert grid8.line_labels == ('l1_0', 'l1_1')
        assert 'p1_3' in grid8.point_labels


class TestCombinatorialGraph:
    def test_all_avoid_is_empty(self, grid8):
        graph = combinatorial_graph(grid8, DetourChoice.all_avoid(grid8))
        assert graph.order == 10
        assert not graph.edges

    def test_one_line_crossing(self, grid8):
        graph = combinatorial_graph(grid8, DetourChoice.from_bits(grid8, 0b0011))
        assert graph.edges == frozenset({('l1_0', 'p0_0'), ('l1_0', 'p1_1')})

    def test_all_cross(self, grid27):
        graph = combinatorial_graph(grid27, DetourChoice.all_cross(grid27))
        line_edges = [e for e in graph.edges if e[0].startswith('l') and e[1].startswith('l')]
        assert len(line_edges) == 25
        assert len(graph.edges) == 55

    def test_choice_mismatch(self, grid8, grid27):
        with pytest.raises(ChoiceMismatch):
            combinatorial_graph(grid27, DetourChoice.all_cross(grid8))

    def test_bits_roundtrip(self, grid27):
        choice = DetourChoice.random(grid27, 11)
        assert DetourChoice.from_bits(grid27, choice.to_bits(grid27)) == choice

    def test_injective_and_clique_bounded(self, grid8):
        encodings = set()
        for bits in range(2**grid8.total_incidences):
            graph = combinatorial_graph(grid8, DetourChoice.from_bits(grid8, bits))
            assert graph.clique_number() <= grid8.k
            encodings.add(graph.canonical_encoding())
        assert len(encodings) == 16

    def test_random_clique_bound(self, grid27):
        rng = np.random.default_rng(5)
        for _ in range(20):
            graph = combinatorial_graph(grid27, DetourChoice.random(grid27, rng))
            assert graph.clique_number() <= 3


class TestRealizeGeometric:
    def test_exhaustive_grid_8_2(self, grid8):
        for bits in range(16):
            choice = DetourChoice.from_bits(grid8, bits)
            family = realize_geometric(grid8, choice)
            assert intersection_graph(family) == combinatorial_graph(grid8, choice)

    def test_all_avoid(self, grid8):
        family = realize_geometric(grid8, DetourChoice.all_avoid(grid8))
        assert is_pseudosegment_family(family)
        assert not intersection_graph(family).edges

    def test_pairs_cross_at_most_once(self, grid8):
        family = realize_geometric(grid8, DetourChoice.all_cross(grid8), Fraction(1, 8))
        assert set(crossing_table(family).values()) <= {0, 1}

    @pytest.mark.slow
    def test_random_grid_27_3(self, grid27):
        rng = np.random.default_rng(27)
        for _ in range(1000):
            choice = DetourChoice.random(grid27, rng)
            family = realize_geometric(grid27, choice)
            graph = intersection_graph(family)
            assert graph == combinatorial_graph(grid27, choice)
            assert graph.clique_number() <= 3

    def test_scale_out_of_range(self, grid8):
        with pytest.raises(BadParams):
            realize_geometric(grid8, DetourChoice.all_cross(grid8), Fraction(1, 2))


class TestGridCensus:
    def test_grid_8_2_verified(self, grid8):
        result = grid_census(grid8, limit=10**6, verify_geometry=True)
        assert result.count == 16
        assert result.verified
        assert result.distinct == 16
        assert result.max_clique <= 2

    def test_grid_27_3_by_formula(self, grid27):
        result = grid_census(grid27, limit=10**6)
        assert result.count == 2**30
        assert not result.verified
        assert result.distinct is None

    def test_single_incidence(self):
        grid = GridIncidence(8, 2, ((0, 0),), ((1, 0),), ((0,),))
        result = grid_census(grid, limit=10**6)
        assert (result.count, result.verified) == (2, True)

    def test_parallel_matches_serial(self, grid8):
        assert grid_census(grid8, jobs=2) == grid_census(grid8, jobs=1)


class TestStaircase:
    def test_forced_single_horizontal(self):
        family = staircase_build(StaircaseParams(1, 1, [(1, 1, 1)]))
        assert len(family) == 4
        assert len(intersection_graph(family).edges) == 3

    def test_degrees(self):
        graph = intersection_graph(staircase_build(StaircaseParams(2, 2, [(1, 1, 1), (2, 2, 2)])))
        assert graph.degree('H1') == 3
        assert graph.degree('H2') == 6

    def test_group_neighborhoods(self):
        params = StaircaseParams(3, 1, [(2, 1, 3)])
        graph = intersection_graph(staircase_build(params))
        assert graph.neighbors('H1') == ['L2', 'L3', 'M1', 'M2', 'M3', 'R1']
        assert graph == staircase_graph(params)

    def test_middle_tops_decrease(self):
        family = staircase_build(StaircaseParams(3, 1, [(1, 1, 1)]))
        curves = {curve.id: curve for curve in family.curves}
        tops = [curves[f"M{u}"].y_max for u in range(1, 4)]
        assert tops[0] > tops[1] > tops[2]
        assert intersection_graph(family).neighbors('H1') == ['L3', 'M1', 'R1']

    def test_random_builds_are_bipartite_pseudosegments(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            params = StaircaseParams.random(3, 4, rng)
            family = staircase_build(params)
            graph = intersection_graph(family)
            assert is_pseudosegment_family(family)
            assert graph.is_bipartite(side=[f"H{t}" for t in range(1, 5)])
            assert graph == staircase_graph(params)

    def test_exhaustive_k2_h2_distinct(self):
        graphs = {
            intersection_graph(staircase_build(StaircaseParams.from_index(2, 2, index)))
            .canonical_encoding()
            for index in range(64)
        }
        assert len(graphs) == 64

    def test_vertex_budget(self):
        assert StaircaseParams(4, 5, [(1, 1, 1)] * 5).n == 17

    @pytest.mark.parametrize("k,h,choices", [
        (2, 1, [(3, 1, 1)]),
        (2, 2, [(1, 1, 1)]),
        (0, 1, [(1, 1, 1)]),
    ])
    def test_bad_params(self, k, h, choices):
        with pytest.raises(BadParams):
            StaircaseParams(k, h, choices)

    @pytest.mark.parametrize("k,h,count", [
        (2, 2, 64),
        (1, 5, 1),
        pytest.param(2, 3, 512, marks=pytest.mark.slow),
        pytest.param(3, 2, 729, marks=pytest.mark.slow),
    ])
    def test_census(self, k, h, count):
        result = staircase_census(k, h, limit=10**4)
        assert result.count == count
        assert result.verified
        assert result.distinct == count

    def test_census_by_formula(self):
        result = staircase_census(4, 3, limit=10**4)
        assert result.count == 64**3
        assert not result.verified


class TestRandomGroundedFamily:
    def test_grounded_and_generic(self):
        family = random_grounded_family(12, 99)
        assert family.labels == tuple(f"g{i}" for i in range(1, 13))
        assert is_double_grounded(family, 0, 1)
        assert is_pseudosegment_family(family)

    def test_reproducible(self):
        assert random_grounded_family(6, 4) == random_grounded_family(6, 4)

    def test_custom_strip_and_prefix(self):
        family = random_grounded_family(3, 1, strip=(2, 5), prefix='a')
        assert family.strip == (2, 5)
        assert family.labels == ('a1', 'a2', 'a3')

    def test_empty_rejected(self):
        with pytest.raises(BadParams):
            random_grounded_family(0, 1)
