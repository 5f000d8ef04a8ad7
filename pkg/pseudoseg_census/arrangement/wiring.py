"""
Wiring diagrams: combinatorial pseudoline arrangements as partial allowable
sequences of adjacent swaps.
"""

import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

from ..config import get_setting
from ..exceptions import (
    CensusError,
    NotDoubleGrounded,
    NotPseudoSegments,
    SharedCrossingX,
    TooLarge,
    UnknownWire,
)
from ..geometry.predicates import crossing_points, grounds_of


logger = logging.getLogger(__name__)


def _pair(a, b):
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Swap:
    """
    One adjacent transposition.

    Attributes:
        position (int): Lower of the two swapped positions, 1-based.
        pair (tuple): The two wire labels, sorted.
    """

    position: int
    pair: tuple

    def __post_init__(self):
        a, b = (str(label) for label in self.pair)
        object.__setattr__(self, 'pair', _pair(a, b))


@dataclass(frozen=True)
class WiringDiagram:
    """
    Wires in initial bottom-to-top order and a well-formed swap sequence.

    Attributes:
        wires (tuple): m distinct labels, bottom to top at the left ground.
        swaps (tuple): Swap objects, left to right.
    """

    wires: tuple
    swaps: tuple = ()

    def __post_init__(self):
        wires = tuple(str(label) for label in self.wires)
        if len(set(wires)) != len(wires):
            raise CensusError("wire labels must be distinct")
        swaps = tuple(
            swap if isinstance(swap, Swap) else Swap(swap[0], swap[1]) for swap in self.swaps
        )
        object.__setattr__(self, 'wires', wires)
        object.__setattr__(self, 'swaps', swaps)

        order = list(wires)
        seen = set()
        for step, swap in enumerate(swaps, start=1):
            if not 1 <= swap.position < len(order):
                raise CensusError(f"swap {step} has position {swap.position} outside [1, {len(order) - 1}]")
            i = swap.position - 1
            if _pair(order[i], order[i + 1]) != swap.pair:
                raise CensusError(
                    f"swap {step} names {swap.pair} but positions {swap.position}, "
                    f"{swap.position + 1} hold {order[i]}, {order[i + 1]}"
                )
            if swap.pair in seen:
                raise CensusError(f"pair {swap.pair} swaps twice")
            seen.add(swap.pair)
            order[i], order[i + 1] = order[i + 1], order[i]

    @property
    def m(self):
        return len(self.wires)

    def orders(self):
        """Yield the permutation before the first swap and after every swap."""
        order = list(self.wires)
        yield tuple(order)
        for swap in self.swaps:
            i = swap.position - 1
            order[i], order[i + 1] = order[i + 1], order[i]
            yield tuple(order)

    def final_order(self):
        *_, last = self.orders()
        return last

    def swapped_pairs(self):
        return [swap.pair for swap in self.swaps]

    def check_wire(self, label):
        if label not in self.wires:
            raise UnknownWire(f"wire {label!r} is not in the diagram")

    def restrict(self, labels):
        """
        Sub-arrangement of the given wires, same sweep order.

        Raises:
            UnknownWire: If a label is not a wire.
        """
        keep = set()
        for label in labels:
            self.check_wire(str(label))
            keep.add(str(label))
        order = [wire for wire in self.wires if wire in keep]
        wires = tuple(order)
        swaps = []
        for swap in self.swaps:
            a, b = swap.pair
            if a in keep and b in keep:
                i = min(order.index(a), order.index(b))
                swaps.append(Swap(i + 1, swap.pair))
                order[i], order[i + 1] = order[i + 1], order[i]
        return WiringDiagram(wires, tuple(swaps))

    def to_text(self):
        lines = [str(self.m), 'wires ' + ' '.join(self.wires)]
        lines += [f"{swap.position} {swap.pair[0]} {swap.pair[1]}" for swap in self.swaps]
        return '\n'.join(lines) + '\n'


@dataclass(frozen=True)
class SweepEvent:
    """A crossing met by the sweep: x, y, the sorted pair and its 1-based position."""

    x: object
    y: object
    pair: tuple
    position: int


def sweep_events(family):
    """
    Sweep a double-grounded pseudo-segment family left to right.

    Args:
        family (CurveFamily): Double-grounded curves with distinct crossing x.

    Returns:
        tuple: (wires bottom-to-top at the left ground, list of SweepEvent in
        increasing x).

    Raises:
        NotDoubleGrounded: If the curves do not share both grounds.
        NotPseudoSegments: If a pair crosses more than once.
        SharedCrossingX: If two crossings share an x-coordinate.
        Degenerate: On non-generic pairs.
    """
    if grounds_of(family) is None:
        raise NotDoubleGrounded("every curve must start and end on the two grounds")

    crossings = []
    for a, b in combinations(family.curves, 2):
        points = crossing_points(a, b)
        if len(points) > 1:
            raise NotPseudoSegments(f"curves {a.id} and {b.id} cross {len(points)} times")
        crossings.extend((point.x, point.y, _pair(a.id, b.id)) for point in points)
    crossings.sort(key=lambda crossing: crossing[0])

    for before, after in zip(crossings, crossings[1:]):
        if before[0] == after[0]:
            raise SharedCrossingX(
                f"pairs {before[2]} and {after[2]} cross at the same x={before[0]}",
                {'x': before[0], 'pairs': (before[2], after[2])},
            )

    order = [curve.id for curve in sorted(family.curves, key=lambda c: c.left_endpoint[1])]
    wires = tuple(order)
    events = []
    for x, y, pair in crossings:
        i = min(order.index(pair[0]), order.index(pair[1]))
        events.append(SweepEvent(x, y, pair, i + 1))
        order[i], order[i + 1] = order[i + 1], order[i]
    return wires, events


def sweep(family):
    """
    Wiring diagram of a double-grounded pseudo-segment family.

    Returns:
        WiringDiagram: Wires by left-ground height, swaps by crossing x.
    """
    wires, events = sweep_events(family)
    return WiringDiagram(wires, tuple(Swap(event.position, event.pair) for event in events))


def x_iso_canonical(diagram):
    """
    Canonical byte string of the swap-pair sequence.

    Two families are x-isomorphic iff their sweeps give equal strings.
    """
    return json.dumps([list(pair) for pair in diagram.swapped_pairs()], separators=(',', ':')).encode()


def enumerate_full_allowable(m, max_m=None, config=None):
    """
    Number of complete allowable sequences on m wires.

    Args:
        m (int): Number of wires.
        max_m (int, optional): Largest m accepted.
        config (dict, optional): Configuration supplying max_m.

    Returns:
        int: Count of swap sequences taking the identity to its reversal with
        every pair swapping exactly once.

    Raises:
        TooLarge: If m > max_m.
    """
    if max_m is None:
        max_m = get_setting(config, 'arrangement', 'max_allowable_m')
    if m > max_m:
        raise TooLarge(f"m={m} exceeds the enumeration limit {max_m}")
    if m <= 1:
        return 1

    target = tuple(range(m - 1, -1, -1))

    @lru_cache(maxsize=None)
    def completions(order):
        if order == target:
            return 1
        total = 0
        for i in range(m - 1):
            if order[i] < order[i + 1]:
                swapped = order[:i] + (order[i + 1], order[i]) + order[i + 2:]
                total += completions(swapped)
        return total

    return completions(tuple(range(m)))


def random_wiring_diagram(m, seed, swap_fraction=None, config=None):
    """
    Random wiring diagram on wires '1'..'m'.

    Performs round(swap_fraction * C(m, 2)) swaps, each chosen uniformly among
    the adjacent pairs that have not swapped yet.

    Args:
        m (int): Number of wires.
        seed (int or numpy.random.Generator): Randomness source.
        swap_fraction (float, optional): Share of all pairs that swap.
        config (dict, optional): Configuration supplying swap_fraction.

    Returns:
        WiringDiagram: The random diagram.
    """
    if swap_fraction is None:
        swap_fraction = get_setting(config, 'arrangement', 'random_swap_fraction')
    rng = np.random.default_rng(seed)
    wires = tuple(str(label) for label in range(1, m + 1))
    order = list(range(m))
    target = int(round(swap_fraction * comb(m, 2)))
    swaps = []
    for _ in range(target):
        legal = [i for i in range(m - 1) if order[i] < order[i + 1]]
        if not legal:
            break
        i = legal[int(rng.integers(len(legal)))]
        swaps.append(Swap(i + 1, (wires[order[i]], wires[order[i + 1]])))
        order[i], order[i + 1] = order[i + 1], order[i]
    return WiringDiagram(wires, tuple(swaps))
