"""
Tests for wiring diagrams, faces and zones, vertical decompositions and weak
cuttings.
"""

from fractions import Fraction
from math import ceil, comb, factorial, log, prod

import numpy as np
import pytest

from pseudoseg_census.arrangement import (
    Swap,
    WiringDiagram,
    enumerate_full_allowable,
    faces,
    random_wiring_diagram,
    sweep,
    vertical_decomposition,
    weak_cutting,
    x_iso_canonical,
    zone_complexity,
)
from pseudoseg_census.arrangement.cutting import sample_size
from pseudoseg_census.arrangement.faces import zone_complexities, zone_ratio
from pseudoseg_census.constructions import random_grounded_family
from pseudoseg_census.exceptions import (
    BadParams, CensusError, NotDoubleGrounded, SharedCrossingX, TooLarge, UnknownWire,
)
from pseudoseg_census.geometry import CurveFamily

from .conftest import segment


def _staircase_tableaux(m):
    """Standard Young tableaux of shape (m-1, ..., 1) by the hook-length formula."""
    cells = comb(m, 2)
    hooks = [2 * (m - 2 - i - j) + 1 for i in range(m - 1) for j in range(m - 1 - i)]
    return factorial(cells) // prod(hooks)


class TestWiringDiagram:
    def test_swap_pair_sorted(self):
        assert Swap(1, ('b', 'a')).pair == ('a', 'b')

    def test_pair_swaps_twice(self):
        with pytest.raises(CensusError):
            WiringDiagram(('a', 'b'), ((1, ('a', 'b')), (1, ('a', 'b'))))

    def test_swap_names_wrong_pair(self):
        with pytest.raises(CensusError):
            WiringDiagram(('a', 'b', 'c'), ((1, ('a', 'c')),))

    def test_position_out_of_range(self):
        with pytest.raises(CensusError):
            WiringDiagram(('a', 'b'), ((2, ('a', 'b')),))

    def test_orders_and_text(self):
        diagram = WiringDiagram(('1', '2', '3'), ((1, ('1', '2')), (2, ('1', '3'))))
        assert list(diagram.orders()) == [('1', '2', '3'), ('2', '1', '3'), ('2', '3', '1')]
        assert diagram.final_order() == ('2', '3', '1')
        assert diagram.to_text() == "3\nwires 1 2 3\n1 1 2\n2 1 3\n"

    def test_restrict(self, full_reversal):
        diagram = sweep(full_reversal).restrict(['3', '1'])
        assert diagram.wires == ('1', '3')
        assert diagram.swaps == (Swap(1, ('1', '3')),)

    def test_unknown_wire(self):
        with pytest.raises(UnknownWire):
            WiringDiagram(('a',)).restrict(['z'])


class TestSweep:
    def test_disjoint_curves(self):
        family = CurveFamily((segment('a', 0, 0, 1, 0), segment('b', 0, 1, 1, 1)))
        assert sweep(family).swaps == ()

    def test_one_crossing(self, crossing_pair):
        diagram = sweep(crossing_pair)
        assert diagram.wires == ('a', 'b')
        assert diagram.swaps == (Swap(1, ('a', 'b')),)

    def test_full_reversal(self, full_reversal):
        diagram = sweep(full_reversal)
        assert diagram.swapped_pairs() == [('1', '2'), ('1', '3'), ('2', '3')]
        assert [swap.position for swap in diagram.swaps] == [1, 2, 1]
        assert diagram.final_order() == ('3', '2', '1')

    def test_shared_crossing_x(self):
        family = CurveFamily((
            segment('a', 0, 0, 1, 2),
            segment('b', 0, 2, 1, 0),
            segment('c', 0, Fraction(1, 2), 1, Fraction(3, 2)),
        ))
        with pytest.raises(SharedCrossingX):
            sweep(family)

    def test_not_grounded(self):
        family = CurveFamily((segment('a', 0, 0, 1, 1), segment('b', 0, 1, 2, 0)))
        with pytest.raises(NotDoubleGrounded):
            sweep(family)

    def test_swapped_pairs_never_repeat(self):
        diagram = sweep(random_grounded_family(15, 8))
        assert len(set(diagram.swapped_pairs())) == len(diagram.swaps)


class TestXIsomorphism:
    def test_zero_swap_diagrams(self):
        assert x_iso_canonical(WiringDiagram(('a', 'b', 'c'))) == x_iso_canonical(
            WiringDiagram(('c', 'b', 'a'))
        )

    def test_two_full_arrangements_differ(self):
        first = WiringDiagram(('1', '2', '3'), (
            (1, ('1', '2')), (2, ('1', '3')), (1, ('2', '3')),
        ))
        second = WiringDiagram(('1', '2', '3'), (
            (2, ('2', '3')), (1, ('1', '3')), (2, ('1', '2')),
        ))
        assert x_iso_canonical(first) != x_iso_canonical(second)

    def test_translation_invariance(self, full_reversal):
        moved = full_reversal.translated(dy=5)
        assert x_iso_canonical(sweep(moved)) == x_iso_canonical(sweep(full_reversal))

    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_stretching_invariance(self, seed):
        family = random_grounded_family(10, seed)
        stretched = family.affine(x_scale=Fraction(7, 3), x_shift=2, y_scale=Fraction(5, 2), y_shift=-4)
        assert x_iso_canonical(sweep(stretched)) == x_iso_canonical(sweep(family))


class TestAllowableSequences:
    @pytest.mark.parametrize("m,count", [(3, 2), (4, 16), (5, 768)])
    def test_counts(self, m, count):
        assert enumerate_full_allowable(m) == count
        assert count == _staircase_tableaux(m)

    def test_too_large(self):
        with pytest.raises(TooLarge):
            enumerate_full_allowable(6)

    def test_trivial(self):
        assert enumerate_full_allowable(1) == 1
        assert enumerate_full_allowable(2) == 1


class TestFaces:
    def test_single_wire(self):
        result = faces(WiringDiagram(('a',)))
        assert len(result) == 2
        assert zone_complexity(WiringDiagram(('a',)), 'a') == 2

    def test_one_swap(self):
        diagram = WiringDiagram(('a', 'b'), ((1, ('a', 'b')),))
        result = faces(diagram)
        assert len(result) == 4
        assert [face.side_count for face in result] == [2, 2, 2, 2]
        assert zone_complexity(diagram, 'a') == zone_complexity(diagram, 'b') == 8

    def test_full_reversal_euler(self, full_reversal):
        diagram = sweep(full_reversal)
        result = faces(diagram)
        assert len(result) == 7
        # each swap splits two edges into four, each wire starts with one edge
        edges = diagram.m + 2 * len(diagram.swaps)
        assert sum(face.side_count for face in result) == 2 * edges

    def test_unknown_wire(self):
        with pytest.raises(UnknownWire):
            zone_complexity(WiringDiagram(('a', 'b')), 'c')

    @pytest.mark.parametrize("m,seed", [(10, 1), (40, 2), (100, 3)])
    def test_zone_bound_on_random_diagrams(self, m, seed):
        diagram = random_wiring_diagram(m, seed)
        assert len(faces(diagram)) == m + 1 + len(diagram.swaps)
        ratio, ok = zone_ratio(diagram)
        assert ok
        assert ratio <= 12

    @pytest.mark.slow
    def test_zone_bound_on_many_random_diagrams(self):
        rng = np.random.default_rng(100)
        for seed in range(100):
            m = int(rng.integers(10, 101))
            diagram = random_wiring_diagram(m, seed)
            assert len(faces(diagram)) == m + 1 + len(diagram.swaps)
            ratio, ok = zone_ratio(diagram)
            assert ok
            assert ratio <= 12

    def test_all_zones_match_single_wire(self):
        diagram = random_wiring_diagram(12, 4)
        zones = zone_complexities(diagram)
        assert set(zones) == set(diagram.wires)
        for wire in diagram.wires:
            assert zones[wire] == zone_complexity(diagram, wire)

    def test_random_diagram_shape(self):
        diagram = random_wiring_diagram(6, 9, swap_fraction=1.0)
        assert diagram.wires == ('1', '2', '3', '4', '5', '6')
        assert len(diagram.swaps) == 15
        assert diagram.final_order() == ('6', '5', '4', '3', '2', '1')


class TestVerticalDecomposition:
    def test_single_curve(self):
        family = CurveFamily((segment('a', 0, 0, 1, 1),))
        decomposition = vertical_decomposition(family, 0, 1)
        assert decomposition.cell_count == 2
        assert [(cell.bottom, cell.top) for cell in decomposition.cells] == [(None, 'a'), ('a', None)]

    def test_two_crossing_curves(self, crossing_pair):
        decomposition = vertical_decomposition(crossing_pair, 0, 1)
        assert decomposition.cell_count == 6
        wedge = decomposition.cells[1]
        assert (wedge.bottom, wedge.top) == ('a', 'b')
        assert (wedge.x_left, wedge.x_right) == (0, Fraction(1, 2))
        assert (wedge.left_origin, wedge.right_origin) == ('ground', 'crossing')
        assert decomposition.adjacency == frozenset({(0, 3), (2, 5)})

    @pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
    def test_pairwise_crossing_bound(self, m):
        family = CurveFamily(
            tuple(segment(f"c{i}", 0, i, 1, -2**i) for i in range(m)),
            strip=(0, 1),
        )
        decomposition = vertical_decomposition(family, 0, 1)
        assert len(sweep(family).swaps) == comb(m, 2)
        assert decomposition.cell_count <= 3 * comb(m, 2) + m + 1

    def test_cells_stack_at_every_abscissa(self):
        family = random_grounded_family(8, 12)
        decomposition = vertical_decomposition(family, 0, 1)
        walls = sorted({cell.x_left for cell in decomposition.cells} | {1})
        for left, right in zip(walls, walls[1:]):
            stack = decomposition.cells_at((left + right) / 2)
            assert [cell.gap for cell in stack] == list(range(9))
            assert stack[0].bottom is None and stack[-1].top is None
            for below, above in zip(stack, stack[1:]):
                assert below.top == above.bottom

    def test_query_crossings(self, crossing_pair):
        query = CurveFamily((segment('p', Fraction(1, 4), Fraction(1, 10), Fraction(3, 4), Fraction(1, 10)),))
        decomposition = vertical_decomposition(crossing_pair, 0, 1, queries=query)
        crossed = [cell.index for cell in decomposition.cells if cell.crossings]
        assert crossed == [0, 3]
        assert decomposition.max_crossing == 1

    def test_not_grounded(self, crossing_pair):
        with pytest.raises(NotDoubleGrounded):
            vertical_decomposition(crossing_pair, 0, 2)

    def test_to_dict(self, crossing_pair):
        payload = vertical_decomposition(crossing_pair, 0, 1).to_dict()
        assert payload['cell_count'] == 6
        assert payload['cells'][0]['bottom'] is None


class TestWeakCutting:
    def test_r_one_accepts_first_sample(self):
        family = random_grounded_family(12, 5)
        result = weak_cutting(family, 1, seed=0)
        assert result.attempts == 1

    def test_r_m_samples_everything(self):
        family = random_grounded_family(6, 5)
        result = weak_cutting(family, 6, seed=0)
        assert set(result.sample) == set(family.labels)
        assert result.max_crossing <= 1

    @pytest.mark.parametrize("seed", range(10))
    def test_fifty_segments(self, seed):
        family = random_grounded_family(50, 1000 + seed)
        result = weak_cutting(family, 4, seed=seed)
        assert result.attempts <= 5
        assert len(result.sample) <= sample_size(50, 4)

    @pytest.mark.slow
    def test_fifty_segments_over_many_seeds(self):
        family = random_grounded_family(50, 1000)
        results = [weak_cutting(family, 4, seed=seed) for seed in range(100)]
        assert all(result.max_crossing <= Fraction(50, 4) for result in results)
        assert all(len(result.sample) <= ceil(6 * 4 * log(50)) for result in results)
        assert sum(result.attempts for result in results) / len(results) <= 5

    def test_small_sample_respects_threshold(self):
        family = random_grounded_family(30, 77)
        result = weak_cutting(family, 2, seed=3, factor=2)
        assert len(result.sample) == sample_size(30, 2, factor=2)
        assert all(2 * len(cell.crossings) <= 30 for cell in result.decomposition.cells)

    @pytest.mark.parametrize("r", [0, Fraction(1, 2), 7])
    def test_bad_r(self, r):
        with pytest.raises(BadParams):
            weak_cutting(random_grounded_family(6, 1), r, seed=0)

    def test_needs_two_curves(self):
        with pytest.raises(BadParams):
            weak_cutting(random_grounded_family(1, 1), 1, seed=0)

    def test_reproducible(self):
        family = random_grounded_family(20, 4)
        first = weak_cutting(family, 2, seed=11, factor=2)
        second = weak_cutting(family, 2, seed=11, factor=2)
        assert first.sample == second.sample
        assert first.to_dict() == second.to_dict()

    def test_sample_size_uses_natural_log(self):
        assert sample_size(50, 1, factor=1) == 4
        assert sample_size(10, 5) == 10
