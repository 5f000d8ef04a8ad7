"""
Recursive median splitting of a strip by curve endpoints.
"""

import logging
import math
from dataclasses import dataclass

from ..exceptions import SharedEndpointX
from ..geometry.curves import CurveFamily


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SplitNode:
    """
    Node of a split tree.

    Attributes:
        strip (tuple): (lo, hi) x-interval of the node.
        through (tuple): Labels of curves spanning the whole node strip.
        endpoint_curves (tuple): Labels of the other curves meeting its interior.
        p (int): Number of curve endpoints strictly inside the strip.
        children (tuple, optional): (left, right) SplitNodes, None for a leaf.
    """

    strip: tuple
    through: tuple
    endpoint_curves: tuple
    p: int
    children: tuple = None

    @property
    def is_leaf(self):
        return self.children is None

    def nodes(self):
        yield self
        if self.children:
            for child in self.children:
                yield from child.nodes()

    def leaves(self):
        return [node for node in self.nodes() if node.is_leaf]

    def depth(self):
        if self.is_leaf:
            return 1
        return 1 + max(child.depth() for child in self.children)

    def restricted_family(self, family):
        """Curves of this node clipped to its strip."""
        lo, hi = self.strip
        curves = []
        for label in self.through + self.endpoint_curves:
            clipped = family.by_label[label].clip(lo, hi)
            if clipped is not None:
                curves.append(clipped)
        return CurveFamily(curves, (lo, hi))

    def to_dict(self):
        return {
            'strip': [str(value) for value in self.strip],
            'through': list(self.through),
            'endpoint_curves': list(self.endpoint_curves),
            'p': self.p,
            'children': None if self.is_leaf else [child.to_dict() for child in self.children],
        }


def _root_strip(family):
    if family.strip is not None:
        return family.strip
    return (
        min(curve.x_min for curve in family.curves),
        max(curve.x_max for curve in family.curves),
    )


def _node(curves, lo, hi):
    meeting = [curve for curve in curves if curve.x_min < hi and curve.x_max > lo]
    through = tuple(c.id for c in meeting if c.x_min <= lo and c.x_max >= hi)
    others = tuple(c.id for c in meeting if not (c.x_min <= lo and c.x_max >= hi))
    inside = sorted(
        x for c in meeting for x in (c.x_min, c.x_max) if lo < x < hi
    )
    if len(inside) <= 1:
        return SplitNode((lo, hi), through, others, len(inside))

    split = inside[math.ceil(len(inside) / 2) - 1]
    children = (_node(meeting, lo, split), _node(meeting, split, hi))
    return SplitNode((lo, hi), through, others, len(inside), children)


def strip_split(family):
    """
    Split the family's strip at median endpoint abscissas until every node
    holds at most one interior endpoint.

    Args:
        family (CurveFamily): Curves inside a strip (the family's strip, or
            the x-range of all curves).

    Returns:
        SplitNode: Root of the split tree.

    Raises:
        SharedEndpointX: If two interior endpoints share an abscissa.
    """
    lo, hi = _root_strip(family)
    seen = {}
    for curve in family.curves:
        for x in (curve.x_min, curve.x_max):
            if lo < x < hi:
                if x in seen:
                    raise SharedEndpointX(
                        f"curves {seen[x]} and {curve.id} have endpoints at x={x}"
                    )
                seen[x] = curve.id

    root = _node(family.curves, lo, hi)
    logger.debug("strip split", extra={'p': root.p, 'depth': root.depth()})
    return root


def check_split_tree(root, family):
    """
    Check the structural invariants of a split tree.

    Args:
        root (SplitNode): Tree to check.
        family (CurveFamily): The family it was built from.

    Returns:
        list: Violation messages; empty when every invariant holds.
    """
    problems = []
    for node in root.nodes():
        lo, hi = node.strip
        meeting = {c.id for c in family.curves if c.x_min < hi and c.x_max > lo}
        if set(node.through) | set(node.endpoint_curves) != meeting:
            problems.append(f"node {node.strip}: curves do not match the strip")
        for label in node.through:
            curve = family.by_label[label]
            if not (curve.x_min <= lo and curve.x_max >= hi):
                problems.append(f"node {node.strip}: {label} does not span")
        for label in node.endpoint_curves:
            curve = family.by_label[label]
            if not (lo < curve.x_min < hi or lo < curve.x_max < hi):
                problems.append(f"node {node.strip}: {label} has no interior endpoint")
        if node.is_leaf != (node.p <= 1):
            problems.append(f"node {node.strip}: leaf status disagrees with p={node.p}")
        if not node.is_leaf:
            for child in node.children:
                if child.p > math.ceil(node.p / 2):
                    problems.append(f"node {child.strip}: p={child.p} exceeds half of {node.p}")

    if root.p >= 1:
        if root.depth() > math.ceil(math.log2(root.p)) + 1:
            problems.append(f"depth {root.depth()} exceeds the bound for p={root.p}")
        if len(root.leaves()) > 2 * root.p:
            problems.append(f"{len(root.leaves())} leaves for p={root.p}")
    return problems
