"""
Exact pairwise predicates on x-monotone curves.

Two curves are compared through their vertical difference d(x) = y1(x) - y2(x)
on the common x-range. d is piecewise linear with breakpoints at the vertices
of both curves, so its zeros (the contact points) are read off exactly from
its values at those breakpoints.
"""

import logging
from dataclasses import dataclass
from itertools import combinations

from ..exceptions import Degenerate, InvalidThroughs
from .curves import as_rat
from .graphs import LabelledGraph


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CrossingPoint:
    """Exact transversal crossing of two curves."""

    x: object
    y: object


@dataclass(frozen=True)
class PseudoSegmentCheck:
    """
    Outcome of is_pseudosegment_family.

    Attributes:
        ok (bool): True when every pair crosses at most once.
        violation (tuple, optional): A witness pair of labels when not ok.
    """

    ok: bool
    violation: tuple = None

    def __bool__(self):
        return self.ok


def _degenerate(c1, c2, x, kind):
    witness = {
        'curves': (c1.id, c2.id),
        'x': x,
        'segments': (c1.segment_index(x), c2.segment_index(x)),
        'kind': kind,
    }
    return Degenerate(
        f"Curves {c1.id} and {c2.id} are not generic at x={x} ({kind})", witness
    )


def crossing_points(c1, c2):
    """
    Exact crossing points of two curves in generic position.

    Args:
        c1 (MonotoneCurve): First curve.
        c2 (MonotoneCurve): Second curve.

    Returns:
        list: CrossingPoint objects ordered by x.

    Raises:
        Degenerate: On a shared endpoint, an endpoint lying on the other curve,
            a tangency or a collinear overlap.
    """
    lo = max(c1.x_min, c2.x_min)
    hi = min(c1.x_max, c2.x_max)
    if lo > hi:
        return []
    if c1.y_max < c2.y_min or c2.y_max < c1.y_min:
        return []

    if lo == hi:
        if c1.y_at(lo) == c2.y_at(lo):
            raise _degenerate(c1, c2, lo, 'endpoint contact')
        return []

    xs = sorted(
        {x for x in c1.xs if lo < x < hi} | {x for x in c2.xs if lo < x < hi} | {lo, hi}
    )
    values = [c1.y_at(x) - c2.y_at(x) for x in xs]

    if values[0] == 0:
        raise _degenerate(c1, c2, xs[0], 'endpoint on curve')
    if values[-1] == 0:
        raise _degenerate(c1, c2, xs[-1], 'endpoint on curve')

    points = []
    for i in range(1, len(xs)):
        before, current = values[i - 1], values[i]
        if current == 0:
            after = values[i + 1]
            if after == 0:
                raise _degenerate(c1, c2, xs[i], 'collinear overlap')
            if (before > 0) == (after > 0):
                raise _degenerate(c1, c2, xs[i], 'tangency')
            points.append(CrossingPoint(xs[i], c1.y_at(xs[i])))
        elif before != 0 and (before > 0) != (current > 0):
            x = xs[i - 1] + (xs[i] - xs[i - 1]) * before / (before - current)
            points.append(CrossingPoint(x, c1.y_at(x)))
    return points


def crossing_count(c1, c2):
    """
    Number of connected components of c1 ∩ c2 (each a transversal crossing).

    Args:
        c1 (MonotoneCurve): First curve.
        c2 (MonotoneCurve): Second curve.

    Returns:
        int: The crossing count.
    """
    return len(crossing_points(c1, c2))


def crossing_table(family):
    """
    Crossing counts of every pair of a family.

    Returns:
        dict: {(label_a, label_b): count} for a before b in family order.
    """
    return {
        (a.id, b.id): crossing_count(a, b) for a, b in combinations(family.curves, 2)
    }


def intersection_graph(family, table=None):
    """
    Intersection graph of a curve family.

    Args:
        family (CurveFamily): Curves in pairwise generic position.
        table (dict, optional): Precomputed crossing_table(family).

    Returns:
        LabelledGraph: Vertices are the curve labels; an edge joins every
        crossing pair.
    """
    if table is None:
        table = crossing_table(family)
    edges = [pair for pair, count in table.items() if count >= 1]
    return LabelledGraph(family.labels, frozenset(edges))


def is_pseudosegment_family(family, table=None):
    """
    Check that every pair of curves crosses at most once.

    Args:
        family (CurveFamily): The curves.
        table (dict, optional): Precomputed crossing_table(family).

    Returns:
        PseudoSegmentCheck: ok, or the first violating pair in family order.
    """
    if table is not None:
        for pair, count in table.items():
            if count > 1:
                return PseudoSegmentCheck(False, pair)
        return PseudoSegmentCheck(True)
    for a, b in combinations(family.curves, 2):
        if crossing_count(a, b) > 1:
            return PseudoSegmentCheck(False, (a.id, b.id))
    return PseudoSegmentCheck(True)


def is_double_grounded(family, x0, x1):
    """
    True iff every curve starts on x = x0 and ends on x = x1.
    """
    x0, x1 = as_rat(x0), as_rat(x1)
    return all(curve.x_min == x0 and curve.x_max == x1 for curve in family.curves)


def grounds_of(family):
    """
    Grounds of a double-grounded family: its strip, or the common x-range.

    Returns:
        tuple or None: (x0, x1), or None when the curves do not share one.
    """
    if family.strip is not None:
        x0, x1 = family.strip
        return (x0, x1) if is_double_grounded(family, x0, x1) else None
    if not family.curves:
        return None
    first = family.curves[0]
    x0, x1 = first.x_min, first.x_max
    return (x0, x1) if is_double_grounded(family, x0, x1) else None


def neighborhood_interval_check(gamma, throughs):
    """
    Check that the throughs crossed by gamma are contiguous in vertical order.

    Args:
        gamma (MonotoneCurve): Curve generic against every through-curve.
        throughs (CurveFamily): Pairwise disjoint curves spanning one strip.

    Returns:
        bool: True iff {i : gamma crosses throughs[i]} is an interval of the
        bottom-to-top order. This holds for every gamma that crosses each
        through-curve at most once; a False is logged as a warning.

    Raises:
        InvalidThroughs: If throughs cross each other or do not span.
    """
    grounds = grounds_of(throughs)
    if grounds is None:
        raise InvalidThroughs("through-curves must all span the same strip")
    for a, b in combinations(throughs.curves, 2):
        if crossing_count(a, b) != 0:
            raise InvalidThroughs(f"through-curves {a.id} and {b.id} cross")

    ordered = sorted(throughs.curves, key=lambda curve: curve.left_endpoint[1])
    hits = [i for i, curve in enumerate(ordered) if crossing_count(gamma, curve) >= 1]
    contiguous = not hits or hits[-1] - hits[0] + 1 == len(hits)
    if not contiguous:
        logger.warning(
            "non-contiguous neighborhood",
            extra={'curve': gamma.id, 'hits': [ordered[i].id for i in hits]},
        )
    return contiguous
