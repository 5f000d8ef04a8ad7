"""
Vertical decomposition of a double-grounded pseudo-segment family.

A wall drops from every crossing up to the next curve above and down to the
next curve below (or to infinity). Inside the strip this splits the
arrangement into generalized trapezoids: each crossing between the curves at
positions p and p+1 ends the cells of gaps p-1, p and p+1 and starts three new
ones, so the strip holds (m + 1) + 3X cells for X crossings.
"""

import logging
from dataclasses import dataclass, field

from ..exceptions import CensusError, NotDoubleGrounded, SharedCrossingX
from ..geometry.curves import as_rat
from ..geometry.predicates import crossing_points, is_double_grounded
from .wiring import sweep_events


logger = logging.getLogger(__name__)

GROUND = 'ground'
CROSSING = 'crossing'


@dataclass(frozen=True)
class Cell:
    """
    Generalized trapezoid.

    Attributes:
        index (int): Creation order.
        gap (int): Gap index, 0 = below every curve.
        bottom (str, optional): Lower curve label; None stands for -infinity.
        top (str, optional): Upper curve label; None stands for +infinity.
        x_left (Rat): Abscissa of the left wall.
        x_right (Rat): Abscissa of the right wall.
        left_origin (str): 'ground' or 'crossing'.
        right_origin (str): 'ground' or 'crossing'.
        crossings (tuple): Labels of query curves meeting the open cell.
    """

    index: int
    gap: int
    bottom: str
    top: str
    x_left: object
    x_right: object
    left_origin: str
    right_origin: str
    crossings: tuple = ()


@dataclass(frozen=True)
class WallEvent:
    """Crossing at x between positions lower+1 and lower+2 (0-based lower) and the cells it starts."""

    x: object
    lower: int
    new_cells: tuple


@dataclass(frozen=True)
class VerticalDecomposition:
    """
    Cells of the strip, wall adjacency and the data needed to walk queries.

    Attributes:
        strip (tuple): (x0, x1).
        wires (tuple): Curve labels bottom to top at x0.
        cells (tuple): Cell objects by index.
        adjacency (frozenset): Index pairs of cells sharing a wall piece of
            positive length.
        walls (tuple): WallEvent objects in x order.
    """

    strip: tuple
    wires: tuple
    cells: tuple
    adjacency: frozenset
    walls: tuple = field(default=(), repr=False)

    @property
    def cell_count(self):
        return len(self.cells)

    @property
    def max_crossing(self):
        return max((len(cell.crossings) for cell in self.cells), default=0)

    def cells_at(self, x):
        """Cells whose open x-interval contains x, bottom to top."""
        x = as_rat(x)
        found = [cell for cell in self.cells if cell.x_left < x < cell.x_right]
        return sorted(found, key=lambda cell: cell.gap)

    def to_dict(self):
        return {
            'strip': [str(value) for value in self.strip],
            'cell_count': self.cell_count,
            'max_crossing': self.max_crossing,
            'cells': [
                {
                    'index': cell.index,
                    'bottom': cell.bottom,
                    'top': cell.top,
                    'x_left': str(cell.x_left),
                    'x_right': str(cell.x_right),
                    'left_origin': cell.left_origin,
                    'right_origin': cell.right_origin,
                    'crossings': list(cell.crossings),
                }
                for cell in self.cells
            ],
        }


def _bounds(order, gap):
    bottom = order[gap - 1] if gap >= 1 else None
    top = order[gap] if gap < len(order) else None
    return bottom, top


def _build_cells(wires, events, x0, x1):
    order = list(wires)
    m = len(order)
    cells = []
    walls = []
    adjacency = set()

    def start(gap, x, origin):
        bottom, top = _bounds(order, gap)
        cells.append({
            'index': len(cells), 'gap': gap, 'bottom': bottom, 'top': top,
            'x_left': x, 'left_origin': origin,
        })
        return len(cells) - 1

    def finish(index, x, origin):
        cells[index]['x_right'] = x
        cells[index]['right_origin'] = origin

    current = [start(gap, x0, GROUND) for gap in range(m + 1)]
    for event in events:
        i = event.position - 1
        for gap in (i, i + 1, i + 2):
            finish(current[gap], event.x, CROSSING)
        previous = {gap: current[gap] for gap in (i, i + 2)}
        order[i], order[i + 1] = order[i + 1], order[i]
        for gap in (i, i + 1, i + 2):
            current[gap] = start(gap, event.x, CROSSING)
        for gap in (i, i + 2):
            adjacency.add((previous[gap], current[gap]))
        walls.append(WallEvent(event.x, i, tuple(current[gap] for gap in (i, i + 1, i + 2))))

    for index in current:
        finish(index, x1, GROUND)
    return cells, walls, adjacency


def _walk_query(query, decomposition, initial_cells, by_label):
    """Indices of the cells whose interior the query curve meets."""
    x_start = max(query.x_min, decomposition.strip[0])
    x_end = min(query.x_max, decomposition.strip[1])
    if x_start >= x_end:
        return set()

    events = []
    for label in decomposition.wires:
        for point in crossing_points(query, by_label[label]):
            if x_start < point.x < x_end:
                events.append((point.x, 1, label))
    for wall in decomposition.walls:
        if x_start <= wall.x < x_end:
            events.append((wall.x, 0, wall))
    events.sort(key=lambda event: (event[0], event[1]))
    for before, after in zip(events, events[1:]):
        if before[0] == after[0]:
            raise SharedCrossingX(
                f"curve {query.id} meets a wall or another crossing at x={before[0]}",
                {'x': before[0], 'curve': query.id},
            )

    order = list(decomposition.wires)
    current = list(initial_cells)
    for wall in decomposition.walls:
        if wall.x >= x_start:
            if wall.x == x_start:
                raise SharedCrossingX(
                    f"curve {query.id} starts on a wall at x={x_start}",
                    {'x': x_start, 'curve': query.id},
                )
            break
        i = wall.lower
        order[i], order[i + 1] = order[i + 1], order[i]
        current[i:i + 3] = wall.new_cells

    y = query.y_at(x_start)
    gap = sum(1 for label in order if by_label[label].y_at(x_start) < y)
    met = {current[gap]}
    for x, kind, payload in events:
        if x <= x_start:
            continue
        if kind == 0:
            i = payload.lower
            order[i], order[i + 1] = order[i + 1], order[i]
            current[i:i + 3] = payload.new_cells
            if i <= gap <= i + 2:
                met.add(current[gap])
        else:
            if gap >= 1 and order[gap - 1] == payload:
                gap -= 1
            elif gap < len(order) and order[gap] == payload:
                gap += 1
            else:
                raise CensusError(f"curve {query.id} crosses {payload} out of order")
            met.add(current[gap])
    return met


def vertical_decomposition(family, x0, x1, queries=None):
    """
    Vertical decomposition of a double-grounded family inside [x0, x1].

    Args:
        family (CurveFamily): Double-grounded pseudo-segments with distinct
            crossing x.
        x0 (Rat): Left ground.
        x1 (Rat): Right ground.
        queries (CurveFamily, optional): Curves whose cell crossings are
            recorded; curves of `family` itself are skipped, since they only
            bound cells.

    Returns:
        VerticalDecomposition: Cells, wall adjacency and per-cell crossing lists.

    Raises:
        NotDoubleGrounded: If a curve misses a ground.
        Degenerate: On non-generic input.
    """
    x0, x1 = as_rat(x0), as_rat(x1)
    if not is_double_grounded(family, x0, x1):
        raise NotDoubleGrounded(f"every curve must run from x={x0} to x={x1}")

    wires, events = sweep_events(family.with_strip((x0, x1)))
    cells, walls, adjacency = _build_cells(wires, events, x0, x1)
    skeleton = VerticalDecomposition(
        (x0, x1), wires, tuple(Cell(**cell) for cell in cells), frozenset(adjacency), tuple(walls)
    )
    if queries is None:
        return skeleton

    initial = list(range(len(wires) + 1))
    hits = {index: [] for index in range(len(cells))}
    own = set(family.labels)
    for query in queries:
        if query.id in own:
            continue
        for index in _walk_query(query, skeleton, initial, family.by_label):
            hits[index].append(query.id)

    decorated = tuple(
        Cell(**cell, crossings=tuple(hits[cell['index']])) for cell in cells
    )
    logger.debug(
        "vertical decomposition",
        extra={'curves': len(wires), 'crossings': len(events), 'cells': len(cells)},
    )
    return VerticalDecomposition((x0, x1), wires, decorated, frozenset(adjacency), tuple(walls))
