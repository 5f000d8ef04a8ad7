"""
Primal and dual trace bounds for double-grounded families crossed by free
pseudo-segments.

Rows of the crossing set system are the curves of A; the ground set is B and
row a holds the curves of B that cross a.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from ..arrangement.decomposition import vertical_decomposition
from ..config import get_setting
from ..constructions.grounded import random_grounded_family
from ..exceptions import (
    BadParams, Degenerate, NotDoubleGrounded, NotPseudoSegments, RetryLimit, TooLarge,
)
from ..geometry.curves import CurveFamily, MonotoneCurve
from ..geometry.predicates import crossing_count, grounds_of, is_pseudosegment_family
from ..setsystem.family import SetFamily
from ..setsystem.shatter import primal_shatter
from ..utils.parallel import run_chunks


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TraceBoundResult:
    """
    Outcome of a trace-bound check.

    Attributes:
        z (int): Trace size.
        max_primal (int): Primal shatter value of the crossing set system at z.
        bound (int): (z+1)(2z+1).
        ok (bool): max_primal <= bound.
        dual_max (int): Most distinct crossing patterns of B on a z-subset of A.
        dual_ok (bool): Every z-subset has at most C(t,2)+t patterns, t being
            the cell count of its vertical decomposition.
    """

    z: int
    max_primal: int
    bound: int
    ok: bool
    dual_max: int = 0
    dual_ok: bool = True

    def to_dict(self):
        return {
            'z': self.z,
            'max_primal': self.max_primal,
            'bound': self.bound,
            'ok': self.ok,
            'dual_max': self.dual_max,
            'dual_ok': self.dual_ok,
        }


def primal_trace_bound(z):
    return (z + 1) * (2 * z + 1)


def crossing_set_system(through, free):
    """
    Set system whose rows are the neighborhoods in `free` of the curves of
    `through`.

    Returns:
        SetFamily: m = |through| rows over a ground set of size |free|.
    """
    rows = []
    for a in through.curves:
        rows.append(sum(1 << j for j, b in enumerate(free.curves) if crossing_count(a, b)))
    return SetFamily(len(free), tuple(rows))


def _dual_patterns(through, free, z, grounds):
    """Largest pattern count over z-subsets of A and whether every subset met its cell bound."""
    matrix = crossing_set_system(through, free).matrix
    dual_max, dual_ok = 0, True
    size = min(z, len(through))
    for chosen in combinations(range(len(through)), size):
        patterns = {tuple(matrix[list(chosen), j]) for j in range(len(free))}
        labels = [through.curves[i].id for i in chosen]
        cells = vertical_decomposition(through.subfamily(labels), *grounds).cell_count
        allowed = comb(cells, 2) + cells
        dual_max = max(dual_max, len(patterns))
        if len(patterns) > allowed:
            dual_ok = False
            logger.warning(
                "dual trace bound exceeded",
                extra={'curves': labels, 'patterns': len(patterns), 'cells': cells},
            )
    return dual_max, dual_ok


def trace_bound_check(through, free, z, dual=True, max_z=None, work_budget=None, config=None):
    """
    Compare the exact primal shatter value at z with (z+1)(2z+1).

    Args:
        through (CurveFamily): Double-grounded family A.
        free (CurveFamily): Family B with endpoints inside A's strip.
        z (int): Trace size, 1 <= z <= max_z.
        dual (bool): Also count patterns of B on every z-subset of A.
        max_z (int, optional): Largest accepted z.
        work_budget (int, optional): Shatter work budget.
        config (dict, optional): Configuration supplying defaults.

    Returns:
        TraceBoundResult: Primal (and dual) values against their bounds.

    Raises:
        TooLarge: If z exceeds max_z.
        NotDoubleGrounded: If A does not span one strip.
        NotPseudoSegments: If two curves of A and B cross twice.
    """
    if max_z is None:
        max_z = get_setting(config, 'census', 'max_trace_z')
    if z < 1:
        raise BadParams(f"z must be positive, got {z}")
    if z > max_z:
        raise TooLarge(f"z={z} exceeds the limit {max_z}")
    grounds = grounds_of(through)
    if grounds is None:
        raise NotDoubleGrounded("A must be double grounded")
    x0, x1 = grounds
    for curve in free.curves:
        if curve.x_min < x0 or curve.x_max > x1:
            raise BadParams(f"curve {curve.id} leaves the strip [{x0}, {x1}]")
    union = CurveFamily(through.curves + free.curves)
    check = is_pseudosegment_family(union)
    if not check:
        raise NotPseudoSegments(f"curves {check.violation} cross more than once")

    bound = primal_trace_bound(z)
    if len(free) == 0:
        max_primal = 1
    else:
        max_primal = primal_shatter(crossing_set_system(through, free), z, work_budget, config)

    dual_max, dual_ok = 0, True
    if dual and len(free) > 0:
        dual_max, dual_ok = _dual_patterns(through, free, z, grounds)

    result = TraceBoundResult(z, max_primal, bound, max_primal <= bound, dual_max, dual_ok)
    logger.debug("trace bound", extra=result.to_dict())
    return result


def _random_point(rng, denominator):
    return Fraction(int(rng.integers(1, denominator)), denominator)


def random_trace_instance(a_count, b_count, seed, config=None):
    """
    Random double-grounded family A on [0, 1] and free segments B inside it.

    B segments have random endpoints with 0 < x < 1; draws touching a curve
    non-generically are redrawn.

    Args:
        a_count (int): |A|.
        b_count (int): |B|.
        seed (int or numpy.random.Generator): Randomness source.
        config (dict, optional): Configuration supplying the retry limit.

    Returns:
        tuple: (A, B) as CurveFamily objects; A labels a1.., B labels b1...
    """
    rng = np.random.default_rng(seed)
    attempts = get_setting(config, 'arrangement', 'cutting_retry_limit')
    through = random_grounded_family(a_count, rng, prefix='a', config=config)
    denominator = 1000 * (a_count + b_count + 1)
    span = Fraction(10 * a_count * a_count + 10, a_count)

    for _ in range(attempts):
        segments = []
        for j in range(1, b_count + 1):
            xs = sorted({_random_point(rng, denominator) for _ in range(2)})
            while len(xs) < 2:
                xs = sorted({_random_point(rng, denominator) for _ in range(2)})
            ys = [_random_point(rng, denominator) * span for _ in range(2)]
            segments.append(MonotoneCurve.segment(f"b{j}", (xs[0], ys[0]), (xs[1], ys[1])))
        free = CurveFamily(segments)
        try:
            is_pseudosegment_family(CurveFamily(through.curves + free.curves))
        except Degenerate:
            continue
        return through, free

    raise RetryLimit(f"no generic free segments in {attempts} attempts")


def _trial_chunk(z, max_a, max_b, seed, dual, config, start, stop):
    results = []
    for index in range(start, stop):
        rng = np.random.default_rng([seed, index])
        a_count = int(rng.integers(max(z, 2), max_a + 1))
        b_count = int(rng.integers(1, max_b + 1))
        through, free = random_trace_instance(a_count, b_count, rng, config)
        results.append(trace_bound_check(through, free, z, dual=dual, config=config))
    return results


def trace_trials(trials, z, seed, max_a=15, max_b=10, dual=False, jobs=1, config=None):
    """
    Randomized trace-bound trials.

    Trial i draws |A| in [max(z, 2), max_a] and |B| in [1, max_b] from a
    generator seeded with (seed, i), so results do not depend on `jobs`.
    The dual pattern count runs one vertical decomposition per z-subset of
    A and is off unless `dual` is set.

    Returns:
        list: TraceBoundResult per trial, in trial order.
    """
    if max_a < max(z, 2):
        raise BadParams(f"max_a={max_a} is below z={z}")
    results = []
    for chunk in run_chunks(_trial_chunk, (z, max_a, max_b, seed, dual, config), trials, jobs):
        results.extend(chunk)
    failures = sum(1 for result in results if not (result.ok and result.dual_ok))
    logger.info(
        "trace trials",
        extra={'trials': trials, 'z': z, 'failures': failures,
               'max_primal': max((result.max_primal for result in results), default=0)},
    )
    return results
