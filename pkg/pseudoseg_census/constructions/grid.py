"""
Grid point/line incidence construction.

Points are (a, b) with a < n^(1/3) and b < n^(2/3); lines are y = a'x + b' with
slope 1 <= a' <= k-1. Each point becomes a short horizontal segment and each
line an x-monotone polyline that detours around every incident point, either
crossing its segment or passing above it. Line-point adjacency therefore
follows the per-point choice while line-line adjacency is fixed (distinct
slopes cross, equal slopes are parallel), so the choices are read back from the
intersection graph bit for bit.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from ..config import get_setting
from ..exceptions import BadParams, ChoiceMismatch, RealizationFailure
from ..geometry.curves import CurveFamily, MonotoneCurve, as_rat
from ..geometry.graphs import LabelledGraph
from ..geometry.predicates import crossing_table, intersection_graph, is_pseudosegment_family
from ..utils.parallel import run_chunks


logger = logging.getLogger(__name__)


def integer_cbrt(n):
    """Largest r with r**3 <= n."""
    r = int(round(n ** (1 / 3)))
    while r**3 > n:
        r -= 1
    while (r + 1) ** 3 <= n:
        r += 1
    return r


def integer_two_thirds(n):
    """Largest t with t**3 <= n**2, i.e. floor(n^(2/3))."""
    return integer_cbrt(n * n)


class Choice(Enum):
    CROSS = 'cross'
    AVOID = 'avoid'


@dataclass(frozen=True)
class GridIncidence:
    """
    Point/line incidence structure of the grid construction.

    Attributes:
        n (int): Vertex budget.
        k (int): Clique parameter.
        points (tuple): (a, b) integer pairs.
        lines (tuple): (slope, intercept) integer pairs, sorted.
        incidences (tuple): Per line, the indices of its incident points in
            increasing a.
    """

    n: int
    k: int
    points: tuple
    lines: tuple
    incidences: tuple

    def __post_init__(self):
        points = tuple(tuple(point) for point in self.points)
        lines = tuple(tuple(line) for line in self.lines)
        incidences = tuple(tuple(row) for row in self.incidences)
        if list(lines) != sorted(lines):
            raise BadParams("lines must be sorted by (slope, intercept)")
        if len(incidences) != len(lines):
            raise BadParams("one incidence list per line is required")
        for (slope, intercept), row in zip(lines, incidences):
            if slope < 1:
                raise BadParams(f"line slopes must be positive, got {slope}")
            expected = [
                i for i, (a, b) in enumerate(points) if b == slope * a + intercept
            ]
            if sorted(row) != expected:
                raise BadParams(
                    f"incidence list of line ({slope}, {intercept}) does not match "
                    "its points"
                )
        object.__setattr__(self, 'points', points)
        object.__setattr__(self, 'lines', lines)
        object.__setattr__(self, 'incidences', incidences)

    @property
    def total_incidences(self):
        return sum(len(row) for row in self.incidences)

    @property
    def point_labels(self):
        return tuple(f"p{a}_{b}" for a, b in self.points)

    @property
    def line_labels(self):
        return tuple(f"l{slope}_{intercept}" for slope, intercept in self.lines)

    @property
    def labels(self):
        return self.point_labels + self.line_labels


def build_grid(n, k):
    """
    Build the grid incidence structure for budget n and clique parameter k.

    Args:
        n (int): Vertex budget, at least 8.
        k (int): Clique parameter, 1 <= k <= floor(n^(1/3)).

    Returns:
        GridIncidence: Deterministic incidence structure.

    Raises:
        BadParams: If n < 8 or k is out of range.
    """
    if n < 8:
        raise BadParams(f"n must be at least 8, got {n}")
    r1 = integer_cbrt(n)
    r2 = integer_two_thirds(n)
    if k < 1 or k > r1:
        raise BadParams(f"k must lie in [1, {r1}] for n={n}, got {k}")

    points = [(a, b) for a in range(r1) for b in range(r2)]
    index = {point: i for i, point in enumerate(points)}
    half = -(-r2 // 2)
    lines = [(slope, intercept) for slope in range(1, k) for intercept in range(half)]
    incidences = [
        tuple(
            index[(a, slope * a + intercept)]
            for a in range(r1)
            if slope * a + intercept < r2
        )
        for slope, intercept in lines
    ]

    for line, row in zip(lines, incidences):
        if 4 * len(row) < r1:
            raise BadParams(f"line {line} has only {len(row)} incidences")

    grid = GridIncidence(n, k, points, lines, incidences)
    logger.debug(
        "grid built",
        extra={'n': n, 'k': k, 'points': len(points), 'lines': len(lines),
               'incidences': grid.total_incidences},
    )
    return grid


@dataclass(frozen=True)
class DetourChoice:
    """
    Per-line choice of Cross or Avoid at every incident point.

    Attributes:
        choices (tuple): One dict per line mapping point index -> Choice.
    """

    choices: tuple

    @classmethod
    def uniform(cls, grid, choice):
        return cls(tuple({i: choice for i in row} for row in grid.incidences))

    @classmethod
    def all_cross(cls, grid):
        return cls.uniform(grid, Choice.CROSS)

    @classmethod
    def all_avoid(cls, grid):
        return cls.uniform(grid, Choice.AVOID)

    @classmethod
    def from_bits(cls, grid, bits):
        """
        Choice vector from an integer: bit t (least significant first, in line
        order then incidence order) set means Cross.
        """
        choices = []
        t = 0
        for row in grid.incidences:
            line_choice = {}
            for i in row:
                line_choice[i] = Choice.CROSS if (bits >> t) & 1 else Choice.AVOID
                t += 1
            choices.append(line_choice)
        return cls(tuple(choices))

    @classmethod
    def random(cls, grid, rng):
        """
        Uniformly random choice vector.

        Args:
            grid (GridIncidence): The grid.
            rng (numpy.random.Generator or int): Generator or seed.
        """
        rng = np.random.default_rng(rng)
        flips = rng.integers(0, 2, size=grid.total_incidences)
        bits = sum(int(flip) << t for t, flip in enumerate(flips))
        return cls.from_bits(grid, bits)

    def to_bits(self, grid):
        bits = 0
        t = 0
        for row, line_choice in zip(grid.incidences, self.choices):
            for i in row:
                if line_choice[i] is Choice.CROSS:
                    bits |= 1 << t
                t += 1
        return bits

    def validate(self, grid):
        """Raise ChoiceMismatch unless the domains equal the grid's incidences."""
        if len(self.choices) != len(grid.lines):
            raise ChoiceMismatch(
                f"{len(self.choices)} choice maps for {len(grid.lines)} lines"
            )
        for line, row, line_choice in zip(grid.lines, grid.incidences, self.choices):
            if set(line_choice) != set(row):
                raise ChoiceMismatch(f"choice domain of line {line} differs from its points")
            for value in line_choice.values():
                if not isinstance(value, Choice):
                    raise ChoiceMismatch(f"invalid choice {value!r} on line {line}")


def combinatorial_graph(grid, choice):
    """
    Intersection graph predicted by the construction rules.

    Args:
        grid (GridIncidence): The grid.
        choice (DetourChoice): Cross/Avoid per incidence.

    Returns:
        LabelledGraph: Point-segments are pairwise non-adjacent, lines are
        adjacent iff their slopes differ, and a line meets a point iff the
        point is incident and chosen Cross.

    Raises:
        ChoiceMismatch: If the choice does not fit the grid.
    """
    choice.validate(grid)
    point_labels = grid.point_labels
    line_labels = grid.line_labels

    edges = set()
    for i, (slope_i, _) in enumerate(grid.lines):
        for j in range(i + 1, len(grid.lines)):
            if grid.lines[j][0] != slope_i:
                edges.add((line_labels[i], line_labels[j]))
    for line_label, line_choice in zip(line_labels, choice.choices):
        for point, value in line_choice.items():
            if value is Choice.CROSS:
                edges.add((point_labels[point], line_label))

    return LabelledGraph(grid.labels, frozenset(edges))


def _line_extent(grid):
    """
    x-range of the line polylines.

    Wide enough to hold every line-line crossing and every point-segment; the
    reduced denominator 4k exceeds any slope difference, so no endpoint sits on
    another line.
    """
    reach = (
        2 * max((abs(intercept) for _, intercept in grid.lines), default=0)
        + max((abs(a) for a, _ in grid.points), default=0)
        + 1
    )
    margin = Fraction(1, 2) + Fraction(1, 4 * grid.k)
    return -reach - margin, reach + margin


def _line_y(slope, intercept, x):
    return slope * x + intercept


def realize_geometric(grid, choice, scale=None):
    """
    Realize a grid and choice vector as an exact curve family.

    Each point (a, b) becomes the segment (a, b)-(a + scale, b). Each line
    follows y = a'x + b' except in a window of half-width
    w = scale / (4 a' 4^rank) around each incident point, where it runs through
    (a, b + d) and (a + w/2, b + d) with d = k w, passing above the segment for
    Avoid and below it (then up through it) for Cross. Windows nest by rank, so
    two lines detouring at the same point still cross once.

    Args:
        grid (GridIncidence): The grid.
        choice (DetourChoice): Cross/Avoid per incidence.
        scale (Rat, optional): Point-segment length, in (0, 1/(2k)]. Default 1/(2k).

    Returns:
        CurveFamily: The realized family.

    Raises:
        RealizationFailure: If the family is not a pseudo-segment family or its
            intersection graph differs from combinatorial_graph(grid, choice).
    """
    choice.validate(grid)
    limit = Fraction(1, 2 * grid.k)
    scale = limit if scale is None else as_rat(scale)
    if scale <= 0 or scale > limit:
        raise BadParams(f"scale must lie in (0, {limit}], got {scale}")

    curves = [
        MonotoneCurve.segment(label, (a, b), (a + scale, b))
        for label, (a, b) in zip(grid.point_labels, grid.points)
    ]

    x_left, x_right = _line_extent(grid)
    for rank, ((slope, intercept), row, line_choice, label) in enumerate(
        zip(grid.lines, grid.incidences, choice.choices, grid.line_labels)
    ):
        w = scale / (4 * slope * 4**rank)
        d = grid.k * w
        vertices = [(x_left, _line_y(slope, intercept, x_left))]
        for point in sorted(row, key=lambda i: grid.points[i][0]):
            a, b = grid.points[point]
            offset = d if line_choice[point] is Choice.AVOID else -d
            vertices += [
                (a - w, _line_y(slope, intercept, a - w)),
                (a, b + offset),
                (a + w / 2, b + offset),
                (a + w, _line_y(slope, intercept, a + w)),
            ]
        vertices.append((x_right, _line_y(slope, intercept, x_right)))
        curves.append(MonotoneCurve(label, vertices))

    family = CurveFamily(curves)
    table = crossing_table(family)
    check = is_pseudosegment_family(family, table)
    if not check:
        raise RealizationFailure(f"curves {check.violation} cross more than once")
    if intersection_graph(family, table) != combinatorial_graph(grid, choice):
        raise RealizationFailure("realized intersection graph differs from the rule graph")
    return family


@dataclass(frozen=True)
class CensusResult:
    """
    Outcome of a labelled census.

    Attributes:
        count (int): Number of labelled graphs the family realizes by formula.
        verified (bool): True when exhaustive enumeration confirmed the count.
        distinct (int, optional): Distinct graphs found, when enumerated.
        max_clique (int, optional): Largest clique number seen, when enumerated.
    """

    count: int
    verified: bool
    distinct: int = None
    max_clique: int = None

    def to_dict(self):
        return {
            'count': self.count,
            'verified': self.verified,
            'distinct': self.distinct,
            'max_clique': self.max_clique,
        }


def _grid_chunk(grid, verify_geometry, scale, start, stop):
    encodings = []
    max_clique = 0
    for bits in range(start, stop):
        choice = DetourChoice.from_bits(grid, bits)
        graph = combinatorial_graph(grid, choice)
        if verify_geometry:
            # realize_geometric raises on any mismatch
            realize_geometric(grid, choice, scale)
        encodings.append(graph.canonical_encoding())
        max_clique = max(max_clique, graph.clique_number())
    return encodings, max_clique


def grid_census(grid, limit=None, verify_geometry=None, jobs=1, scale=None, config=None):
    """
    Count the labelled graphs of a grid, exhaustively when small enough.

    Args:
        grid (GridIncidence): The grid.
        limit (int, optional): Enumerate only when 2^I <= limit.
        verify_geometry (bool, optional): Also realize every choice geometrically.
        jobs (int): Worker processes for the enumeration.
        scale (Rat, optional): Point-segment length for geometric checks.
        config (dict, optional): Configuration supplying defaults.

    Returns:
        CensusResult: count = 2^I; verified when all 2^I graphs are distinct
        and every clique number is at most k.
    """
    if limit is None:
        limit = get_setting(config, 'grid', 'census_limit')
    if verify_geometry is None:
        verify_geometry = get_setting(config, 'grid', 'verify_geometry')

    count = 2**grid.total_incidences
    if count > limit:
        logger.info("grid census by formula", extra={'incidences': grid.total_incidences})
        return CensusResult(count, False)

    encodings = set()
    max_clique = 0
    for chunk, chunk_clique in run_chunks(
        _grid_chunk, (grid, verify_geometry, scale), count, jobs
    ):
        encodings.update(chunk)
        max_clique = max(max_clique, chunk_clique)

    verified = len(encodings) == count and max_clique <= grid.k
    logger.info(
        "grid census enumerated",
        extra={'count': count, 'distinct': len(encodings), 'max_clique': max_clique},
    )
    return CensusResult(count, verified, len(encodings), max_clique)
