"""
Exhaustive census of double-grounded pseudo-segment arrangements on few curves.
"""

import logging
from dataclasses import dataclass
from itertools import permutations

from ..config import get_setting
from ..exceptions import BadParams, TooLarge


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroundedCensus:
    """
    Counts from the grounded census.

    Attributes:
        m (int): Number of curves.
        graph_count (int): Distinct labelled intersection graphs.
        class_count (int): Distinct x-isomorphism classes (swap sequences).
    """

    m: int
    graph_count: int
    class_count: int

    def to_dict(self):
        return {'m': self.m, 'graph_count': self.graph_count, 'class_count': self.class_count}


def _walk(order, swapped, sequence, graphs, classes):
    graphs.add(frozenset(swapped))
    classes.add(tuple(sequence))
    for i in range(len(order) - 1):
        pair = (min(order[i], order[i + 1]), max(order[i], order[i + 1]))
        if pair in swapped:
            continue
        order[i], order[i + 1] = order[i + 1], order[i]
        swapped.add(pair)
        sequence.append(pair)
        _walk(order, swapped, sequence, graphs, classes)
        sequence.pop()
        swapped.discard(pair)
        order[i], order[i + 1] = order[i + 1], order[i]


def enumerate_double_grounded(m, max_m=None, config=None):
    """
    Census of double-grounded arrangements of m labelled pseudo-segments.

    Every arrangement is a partial allowable sequence from some initial
    bottom-to-top order on the left ground. The depth-first search visits
    every such sequence from every initial order.

    Args:
        m (int): Number of curves, 1 <= m <= max_m.
        max_m (int, optional): Largest accepted m.
        config (dict, optional): Configuration supplying the limit.

    Returns:
        GroundedCensus: graph_count counts the sets of swapped pairs (edge iff
        the pair swaps); class_count counts the swap sequences.

    Raises:
        TooLarge: If m exceeds max_m.
    """
    if max_m is None:
        max_m = get_setting(config, 'census', 'max_grounded_m')
    if m < 1:
        raise BadParams(f"m must be positive, got {m}")
    if m > max_m:
        raise TooLarge(f"m={m} exceeds the grounded census limit {max_m}")

    graphs, classes = set(), set()
    for start in permutations(range(1, m + 1)):
        _walk(list(start), set(), [], graphs, classes)

    census = GroundedCensus(m, len(graphs), len(classes))
    logger.info("grounded census", extra=census.to_dict())
    return census
