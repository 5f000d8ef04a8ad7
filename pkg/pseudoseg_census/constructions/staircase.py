"""
Staircase construction of bipartite segment intersection graphs.

Three groups of k near-vertical segments (left, middle, right) and h
horizontal segments. A horizontal with choice (i, j, l) starts between the
left columns so that it meets the last i of them, ends between the right
columns so that it meets the first j of them, and sits at a height that only
the first l middle segments reach.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..config import get_setting
from ..exceptions import BadParams, RealizationFailure
from ..geometry.curves import CurveFamily, MonotoneCurve
from ..geometry.graphs import LabelledGraph
from ..geometry.predicates import crossing_table, intersection_graph, is_pseudosegment_family
from ..utils.parallel import run_chunks
from .grid import CensusResult


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StaircaseParams:
    """
    Parameters of a staircase family.

    Attributes:
        k (int): Size of each vertical group.
        h (int): Number of horizontal segments.
        choices (tuple): h triples (i, j, l), each entry in [1, k].
    """

    k: int
    h: int
    choices: tuple

    def __post_init__(self):
        if self.k < 1 or self.h < 1:
            raise BadParams(f"k and h must be positive, got k={self.k}, h={self.h}")
        choices = tuple(tuple(choice) for choice in self.choices)
        if len(choices) != self.h:
            raise BadParams(f"expected {self.h} choice triples, got {len(choices)}")
        for choice in choices:
            if len(choice) != 3 or not all(1 <= value <= self.k for value in choice):
                raise BadParams(f"choice {choice} must be a triple in [1, {self.k}]")
        object.__setattr__(self, 'choices', choices)

    @property
    def n(self):
        return 3 * self.k + self.h

    @classmethod
    def from_index(cls, k, h, index):
        """Choice vector number `index` of the (k^3)^h, in base-k^3 digits."""
        choices = []
        for _ in range(h):
            index, digit = divmod(index, k**3)
            rest, i = divmod(digit, k)
            ell, j = divmod(rest, k)
            choices.append((i + 1, j + 1, ell + 1))
        return cls(k, h, choices)

    @classmethod
    def random(cls, k, h, rng):
        rng = np.random.default_rng(rng)
        draws = rng.integers(1, k + 1, size=(h, 3))
        return cls(k, h, [tuple(int(v) for v in row) for row in draws])


def _labels(prefix, count):
    return [f"{prefix}{u}" for u in range(1, count + 1)]


def staircase_build(params):
    """
    Build the staircase segment family.

    Coordinates, with unit = 1/(k+1): left segment L_u runs from
    (-1 + u unit, -1) to (-1 + u unit + unit/8, 1), right segment R_u the same
    around x = 1, middle segment M_u from (u unit/4, -1) up to height
    (k + 1 - u) unit/4, so middle tops strictly decrease with u. Horizontal t
    with (i, j, l) sits at height (k - l + t/(h+1)) unit/4 and spans from just
    right of left column k - i to just right of right column j; a per-t offset
    keeps endpoint x distinct.

    Args:
        params (StaircaseParams): Parameters.

    Returns:
        CurveFamily: 3k + h segments labelled L1.., M1.., R1.., H1...
    """
    k, h = params.k, params.h
    unit = Fraction(1, k + 1)
    lean = unit / 8
    step = unit / 4
    shift = unit / (16 * (h + 1))

    curves = []
    for u, label in enumerate(_labels('L', k), start=1):
        x = -1 + u * unit
        curves.append(MonotoneCurve.segment(label, (x, -1), (x + lean, 1)))
    for u, label in enumerate(_labels('M', k), start=1):
        x = u * step
        curves.append(MonotoneCurve.segment(label, (x, -1), (x + lean, (k + 1 - u) * step)))
    for u, label in enumerate(_labels('R', k), start=1):
        x = 1 + u * unit
        curves.append(MonotoneCurve.segment(label, (x, -1), (x + lean, 1)))

    for t, (label, (i, j, ell)) in enumerate(zip(_labels('H', h), params.choices), start=1):
        y = (k - ell) * step + step * Fraction(t, h + 1)
        x_left = -1 + unit * Fraction(8 * (k - i) + 5, 8) + t * shift
        x_right = 1 + unit * Fraction(8 * j + 5, 8) + t * shift
        curves.append(MonotoneCurve.segment(label, (x_left, y), (x_right, y)))

    return CurveFamily(curves)


def staircase_graph(params):
    """
    Intersection graph of the staircase family, read from the choices.

    Returns:
        LabelledGraph: Horizontal t with (i, j, l) meets L_{k-i+1..k},
        R_{1..j} and M_{1..l}; no other pair meets.
    """
    k = params.k
    left, middle, right = _labels('L', k), _labels('M', k), _labels('R', k)
    horizontals = _labels('H', params.h)
    edges = set()
    for label, (i, j, ell) in zip(horizontals, params.choices):
        edges.update((label, other) for other in left[k - i:])
        edges.update((label, other) for other in right[:j])
        edges.update((label, other) for other in middle[:ell])
    return LabelledGraph(left + middle + right + horizontals, frozenset(edges))


def _staircase_chunk(k, h, start, stop):
    encodings = []
    for index in range(start, stop):
        params = StaircaseParams.from_index(k, h, index)
        family = staircase_build(params)
        table = crossing_table(family)
        check = is_pseudosegment_family(family, table)
        if not check:
            raise RealizationFailure(f"staircase curves {check.violation} cross twice")
        graph = intersection_graph(family, table)
        if graph != staircase_graph(params):
            raise RealizationFailure(f"staircase graph mismatch for {params.choices}")
        horizontals = [label for label in graph.labels if label.startswith('H')]
        if not graph.is_bipartite(side=horizontals):
            raise RealizationFailure("staircase graph is not bipartite")
        encodings.append(graph.canonical_encoding())
    return encodings


def staircase_census(k, h, limit=None, jobs=1, config=None):
    """
    Count the labelled bipartite graphs of the staircase family.

    Args:
        k (int): Group size.
        h (int): Number of horizontals.
        limit (int, optional): Enumerate only when (k^3)^h <= limit.
        jobs (int): Worker processes.
        config (dict, optional): Configuration supplying defaults.

    Returns:
        CensusResult: count = (k^3)^h; verified when every choice vector was
        built, checked and gave a distinct graph.
    """
    if k < 1 or h < 1:
        raise BadParams(f"k and h must be positive, got k={k}, h={h}")
    if limit is None:
        limit = get_setting(config, 'staircase', 'census_limit')

    count = (k**3) ** h
    if count > limit:
        logger.info("staircase census by formula", extra={'k': k, 'h': h})
        return CensusResult(count, False)

    encodings = set()
    for chunk in run_chunks(_staircase_chunk, (k, h), count, jobs):
        encodings.update(chunk)

    logger.info(
        "staircase census enumerated",
        extra={'k': k, 'h': h, 'count': count, 'distinct': len(encodings)},
    )
    return CensusResult(count, len(encodings) == count, len(encodings))
