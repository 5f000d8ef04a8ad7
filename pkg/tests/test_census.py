"""
Tests for the census experiments: strip splitting, Dilworth coloring, trace
bounds, the grounded census, the multiset identity and the bound table.
"""

from fractions import Fraction
from math import comb, log2

import numpy as np
import pytest

from pseudoseg_census.census import (
    PermutationPoset,
    bound_table,
    check_split_tree,
    crossing_set_system,
    dilworth_color,
    enumerate_double_grounded,
    format_bound_table,
    h_relation_counts,
    longest_decreasing_length,
    random_trace_instance,
    strip_split,
    trace_bound_check,
    trace_trials,
    verify_h_relation,
)
from pseudoseg_census.census.tables import BOUND_TABLE_COLUMNS
from pseudoseg_census.constructions import StaircaseParams, staircase_build
from pseudoseg_census.exceptions import (
    BadParams, CensusError, NotDoubleGrounded, NotPseudoSegments, SharedEndpointX, TooLarge,
)
from pseudoseg_census.geometry import CurveFamily, MonotoneCurve, intersection_graph

from .conftest import segment


def _lds_by_dp(permutation):
    best = [1] * len(permutation)
    for j in range(len(permutation)):
        for i in range(j):
            if permutation[i] > permutation[j]:
                best[j] = max(best[j], best[i] + 1)
    return max(best, default=0)


def _random_segments(rng, count):
    xs = rng.choice(np.arange(1, 1000), size=2 * count, replace=False)
    curves = []
    for index in range(count):
        x0, x1 = sorted(int(v) for v in xs[2 * index:2 * index + 2])
        curves.append(segment(
            f"s{index}",
            Fraction(x0, 1000), Fraction(int(rng.integers(0, 100)), 7),
            Fraction(x1, 1000), Fraction(int(rng.integers(0, 100)), 7),
        ))
    return CurveFamily(curves, strip=(0, 1))


class TestStripSplit:
    def test_through_curves_only(self):
        family = CurveFamily((segment('a', 0, 0, 1, 0), segment('b', 0, 1, 1, 1)), strip=(0, 1))
        root = strip_split(family)
        assert root.is_leaf
        assert root.p == 0
        assert set(root.through) == {'a', 'b'}
        assert root.endpoint_curves == ()

    def test_four_interior_segments(self):
        family = CurveFamily(
            tuple(segment(f"s{i}", 2 * i + 1, i, 2 * i + 2, i) for i in range(4)),
            strip=(0, 10),
        )
        root = strip_split(family)
        assert root.p == 8
        assert [child.p for child in root.children] == [3, 4]
        assert all(child.p <= 4 for child in root.children)
        assert check_split_tree(root, family) == []

    def test_staircase_in_unit_strip(self):
        staircase = staircase_build(StaircaseParams(2, 2, [(1, 2, 1), (2, 1, 2)]))
        family = staircase.affine(x_scale=Fraction(1, 4), x_shift=Fraction(1, 2), strip=(0, 1))
        root = strip_split(family)
        assert root.p == 2 * len(family)
        assert check_split_tree(root, family) == []

    def test_shared_endpoint_x(self):
        family = CurveFamily(
            (segment('a', Fraction(1, 4), 0, Fraction(1, 2), 0),
             segment('b', Fraction(1, 2), 1, Fraction(3, 4), 1)),
            strip=(0, 1),
        )
        with pytest.raises(SharedEndpointX):
            strip_split(family)

    def test_random_families(self):
        rng = np.random.default_rng(12)
        for _ in range(100):
            family = _random_segments(rng, int(rng.integers(1, 61)))
            root = strip_split(family)
            assert check_split_tree(root, family) == []
            assert len(root.leaves()) <= 2 * root.p

    def test_restricted_family(self):
        family = CurveFamily(
            (segment('a', 0, 0, 1, 1), segment('b', Fraction(1, 4), 5, Fraction(3, 4), 5)),
            strip=(0, 1),
        )
        root = strip_split(family)
        right = root.children[1]
        restricted = right.restricted_family(family)
        assert restricted.strip == right.strip
        assert set(restricted.labels) == {'a', 'b'}

    def test_checker_reports_violations(self):
        family = CurveFamily((segment('a', 0, 0, 1, 1),), strip=(0, 1))
        root = strip_split(family)
        broken = type(root)(root.strip, (), (), root.p)
        assert check_split_tree(broken, family)


class TestDilworth:
    def test_identity(self):
        assert dilworth_color(PermutationPoset((1, 2, 3, 4))) == [[1, 2, 3, 4]]

    def test_two_runs(self):
        assert dilworth_color(PermutationPoset((2, 1, 4, 3))) == [[1, 3], [2, 4]]

    def test_reversal(self):
        assert longest_decreasing_length(PermutationPoset((4, 3, 2, 1))) == 4

    def test_not_a_permutation(self):
        with pytest.raises(CensusError):
            PermutationPoset((1, 1, 2))

    @pytest.mark.slow
    def test_random_permutations_match_dp(self):
        rng = np.random.default_rng(99)
        for _ in range(10_000):
            t = int(rng.integers(1, 51))
            permutation = tuple(int(v) + 1 for v in rng.permutation(t))
            classes = dilworth_color(PermutationPoset(permutation))
            assert len(classes) == _lds_by_dp(permutation)
            assert sorted(p for cls in classes for p in cls) == list(range(1, t + 1))
            for cls in classes:
                values = [permutation[p - 1] for p in cls]
                assert values == sorted(values)

    def test_through_curves(self, full_reversal):
        poset = PermutationPoset.from_through_curves(full_reversal)
        assert poset.permutation == (3, 2, 1)
        assert poset.crossing_graph() == intersection_graph(full_reversal)
        assert poset.crossing_graph().clique_number() == longest_decreasing_length(poset)

    def test_through_curves_must_span(self):
        family = CurveFamily((segment('a', 0, 0, 1, 1), segment('b', 0, 1, 2, 0)))
        with pytest.raises(NotDoubleGrounded):
            PermutationPoset.from_through_curves(family)


class TestTraceBounds:
    @staticmethod
    def _free_crossing_a():
        return CurveFamily((segment('b1', Fraction(1, 10), 0, Fraction(1, 5), Fraction(1, 2)),))

    def test_crossing_set_system(self, crossing_pair):
        family = crossing_set_system(crossing_pair, self._free_crossing_a())
        assert family.n == 1
        assert family.rows == (1, 0)

    def test_single_element(self, crossing_pair):
        result = trace_bound_check(crossing_pair, self._free_crossing_a(), 1)
        assert result.max_primal == 2
        assert result.bound == 6
        assert result.ok
        assert result.dual_ok
        assert result.dual_max == 1

    def test_empty_free_family(self, crossing_pair):
        result = trace_bound_check(crossing_pair, CurveFamily(()), 2)
        assert result.max_primal == 1
        assert result.ok

    @pytest.mark.parametrize("z,error", [(0, BadParams), (7, TooLarge)])
    def test_z_range(self, crossing_pair, z, error):
        with pytest.raises(error):
            trace_bound_check(crossing_pair, self._free_crossing_a(), z)

    def test_free_curve_outside_strip(self, crossing_pair):
        free = CurveFamily((segment('b1', Fraction(1, 2), 3, 2, 4),))
        with pytest.raises(BadParams):
            trace_bound_check(crossing_pair, free, 1)

    def test_double_crossing_rejected(self, crossing_pair):
        free = CurveFamily((MonotoneCurve('b1', (
            (Fraction(1, 10), 0), (Fraction(1, 2), 1), (Fraction(9, 10), 0),
        )),))
        with pytest.raises(NotPseudoSegments):
            trace_bound_check(crossing_pair, free, 1)

    def test_random_instance_shape(self):
        through, free = random_trace_instance(5, 4, 3)
        assert through.labels == ('a1', 'a2', 'a3', 'a4', 'a5')
        assert free.labels == ('b1', 'b2', 'b3', 'b4')
        assert all(0 < curve.x_min < curve.x_max < 1 for curve in free)

    def test_dual_patterns_on_small_instances(self):
        for seed in range(5):
            through, free = random_trace_instance(5, 6, seed)
            result = trace_bound_check(through, free, 2, dual=True)
            assert result.ok
            assert result.dual_ok

    @pytest.mark.slow
    @pytest.mark.parametrize("z", [1, 2, 3, 4])
    def test_random_trials(self, z):
        results = trace_trials(200, z, seed=2024)
        assert len(results) == 200
        assert all(result.ok for result in results)
        assert all(result.max_primal <= (z + 1) * (2 * z + 1) for result in results)
        # one element has only two traces
        assert max(result.max_primal for result in results) >= min(z + 2, 2**z)

    def test_trials_independent_of_jobs(self):
        serial = trace_trials(6, 2, seed=5, max_a=6, max_b=4, jobs=1)
        parallel = trace_trials(6, 2, seed=5, max_a=6, max_b=4, jobs=3)
        assert serial == parallel

    def test_trials_need_room_for_z(self):
        with pytest.raises(BadParams):
            trace_trials(1, 4, seed=0, max_a=3)


class TestGroundedCensus:
    def test_two_curves(self):
        assert enumerate_double_grounded(2).graph_count == 2

    def test_three_curves_realize_every_graph(self):
        census = enumerate_double_grounded(3)
        assert census.graph_count == 2**comb(3, 2)
        assert census.class_count >= census.graph_count

    def test_single_curve(self):
        census = enumerate_double_grounded(1)
        assert (census.graph_count, census.class_count) == (1, 1)

    def test_four_curves_reproducible(self):
        assert enumerate_double_grounded(4) == enumerate_double_grounded(4)

    def test_limits(self):
        with pytest.raises(TooLarge):
            enumerate_double_grounded(5)
        with pytest.raises(BadParams):
            enumerate_double_grounded(0)

    def test_to_dict(self):
        assert enumerate_double_grounded(2).to_dict() == {'m': 2, 'graph_count': 2, 'class_count': 2}


class TestHRelation:
    def test_hand_checkable(self):
        relation = h_relation_counts(1, 2, 2, 1)
        assert relation.h == 3
        assert relation.h_distinct == (2, 1)
        assert relation.rhs == 3
        assert relation.holds

    def test_quadratic_bound(self):
        assert verify_h_relation(2, 2, 2, 2)

    def test_constant_below_one(self):
        relation = h_relation_counts(2, 3, Fraction(1, 2), 1)
        assert relation.h == 0
        assert relation.rhs == 0

    @pytest.mark.parametrize("c,d", [(2, 1), (2, 2)])
    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_identity_holds(self, n, m, c, d):
        assert verify_h_relation(n, m, c, d)

    def test_limits(self):
        with pytest.raises(TooLarge):
            h_relation_counts(4, 1, 2, 1)
        with pytest.raises(TooLarge):
            h_relation_counts(1, 5, 2, 1)
        with pytest.raises(BadParams):
            h_relation_counts(0, 1, 2, 1)

    def test_to_dict(self):
        payload = h_relation_counts(1, 1, Fraction(3, 2), 1).to_dict()
        assert payload['c'] == '3/2'
        assert payload['holds'] is True


class TestBoundTable:
    def test_grid_rows(self):
        table = bound_table({'grid': [{'n': 8, 'k': 2}, {'n': 27, 'k': 3}, {'n': 64, 'k': 4}]})
        assert list(table.columns) == BOUND_TABLE_COLUMNS
        assert table['log2_count'].tolist() == [4, 30, 95]
        assert set(table['exponent_model']) == {'k*n'}

    def test_staircase_rows(self):
        entries = [{'k': k, 'h': h} for k in (2, 3) for h in (2, 3, 4)]
        table = bound_table({'staircase': entries}, config={'staircase': {'census_limit': 1}})
        for row, entry in zip(table.itertuples(), entries):
            assert row.log2_count == pytest.approx(3 * entry['h'] * log2(entry['k']))
            assert row.n == 3 * entry['k'] + entry['h']

    def test_double_grounded_rows(self):
        table = bound_table({'double_grounded': [{'m': 1}, {'m': 2}]})
        assert table['log2_count'].tolist() == [0, 1]
        assert table['fitted_constant'].isna().tolist() == [True, False]

    def test_empty_experiments(self):
        table = bound_table({})
        assert table.empty
        assert list(table.columns) == BOUND_TABLE_COLUMNS

    def test_unknown_family(self):
        with pytest.raises(BadParams):
            bound_table({'circles': [{'n': 3}]})

    def test_formatting(self):
        table = format_bound_table(bound_table({'double_grounded': [{'m': 1}, {'m': 2}]}))
        assert table['k'].tolist() == ['', '']
        assert table['n'].tolist() == ['1', '2']
        assert table['fitted_constant'].tolist() == ['', '0.5']
