"""
Faces and zones of a wiring diagram inside the strip.

Gaps are numbered 0..m bottom to top (gap g lies between positions g and g+1).
Every gap holds one open face; a swap at position p closes the face in gap p
and opens a new one there, while the faces just below and above gain a side
on the wire that now bounds them. The grounds are not counted as sides.
"""

import logging
from dataclasses import dataclass

from ..config import get_setting


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Face:
    """
    Face of a wiring diagram.

    Attributes:
        index (int): Creation order.
        gap (int): Gap the face lives in.
        sides (tuple): Wire edges on the boundary as (wire, edge number)
            pairs; a wire's edges are numbered from 0 at the left ground.
    """

    index: int
    gap: int
    sides: tuple

    @property
    def side_count(self):
        return len(self.sides)

    @property
    def wires(self):
        return frozenset(wire for wire, _ in self.sides)


def faces(diagram):
    """
    Faces of the arrangement of the diagram's wires within the strip.

    Args:
        diagram (WiringDiagram): The diagram.

    Returns:
        list: Face objects; there are m + 1 + (number of swaps) of them.
    """
    m = diagram.m
    order = list(diagram.wires)
    edge = {wire: 0 for wire in order}
    closed = []
    counter = 0

    def open_face(gap):
        nonlocal counter
        sides = []
        if gap >= 1:
            sides.append((order[gap - 1], edge[order[gap - 1]]))
        if gap < m:
            sides.append((order[gap], edge[order[gap]]))
        counter += 1
        return {'index': counter - 1, 'gap': gap, 'sides': sides}

    def close_face(face):
        closed.append(Face(face['index'], face['gap'], tuple(face['sides'])))

    current = [open_face(gap) for gap in range(m + 1)]
    for swap in diagram.swaps:
        i = swap.position - 1
        lower, upper = order[i], order[i + 1]
        close_face(current[i + 1])
        edge[lower] += 1
        edge[upper] += 1
        order[i], order[i + 1] = upper, lower
        current[i]['sides'].append((upper, edge[upper]))
        current[i + 2]['sides'].append((lower, edge[lower]))
        current[i + 1] = open_face(i + 1)

    for face in current:
        close_face(face)
    return sorted(closed, key=lambda face: face.index)


def zone_complexities(diagram):
    """
    Zone complexity of every wire.

    Returns:
        dict: wire -> sum of side counts over faces with a side on that wire.
    """
    totals = {wire: 0 for wire in diagram.wires}
    for face in faces(diagram):
        for wire in face.wires:
            totals[wire] += face.side_count
    return totals


def zone_complexity(diagram, wire):
    """
    Total side count of the faces supported by one wire.

    Raises:
        UnknownWire: If the wire is not in the diagram.
    """
    wire = str(wire)
    diagram.check_wire(wire)
    return zone_complexities(diagram)[wire]


def zone_ratio(diagram, constant=None, config=None):
    """
    Largest zone complexity divided by m, with the configured constant.

    Returns:
        tuple: (max ratio as float, True when it does not exceed the constant).
    """
    if constant is None:
        constant = get_setting(config, 'arrangement', 'zone_constant')
    ratio = max(zone_complexities(diagram).values()) / diagram.m
    logger.debug("zone ratio", extra={'m': diagram.m, 'ratio': ratio})
    return ratio, ratio <= constant
