"""
Random double-grounded segment families.
"""

import logging
from fractions import Fraction
from itertools import combinations

import numpy as np

from ..config import get_setting
from ..exceptions import BadParams, RetryLimit
from ..geometry.curves import CurveFamily, MonotoneCurve


logger = logging.getLogger(__name__)


def _crossing_xs_distinct(left, right):
    seen = set()
    for i, j in combinations(range(len(left)), 2):
        gap_left = left[i] - left[j]
        gap_right = right[i] - right[j]
        if (gap_left > 0) == (gap_right > 0):
            continue
        x = Fraction(gap_left, gap_left - gap_right)
        if x in seen:
            return False
        seen.add(x)
    return True


def random_grounded_family(m, seed, strip=(0, 1), prefix='g', config=None):
    """
    Random family of m segments from the left ground to the right ground.

    Left and right heights are distinct integers, so no two segments share an
    endpoint; heights are redrawn until every crossing has its own x.

    Args:
        m (int): Number of segments, at least 1.
        seed (int or numpy.random.Generator): Randomness source.
        strip (tuple): (x0, x1) grounds.
        prefix (str): Label prefix; labels are prefix1..prefixm.
        config (dict, optional): Configuration supplying the retry limit.

    Returns:
        CurveFamily: Double-grounded pseudo-segments with the given strip.

    Raises:
        RetryLimit: If no generic draw was found.
    """
    if m < 1:
        raise BadParams(f"m must be positive, got {m}")
    rng = np.random.default_rng(seed)
    x0, x1 = (Fraction(value) for value in strip)
    span = 10 * m * m + 10
    attempts = get_setting(config, 'arrangement', 'cutting_retry_limit')

    for attempt in range(1, attempts + 1):
        left = [int(v) for v in rng.choice(span, size=m, replace=False)]
        right = [int(v) for v in rng.choice(span, size=m, replace=False)]
        if not _crossing_xs_distinct(left, right):
            continue
        curves = [
            MonotoneCurve.segment(
                f"{prefix}{index}",
                (x0, Fraction(y0, m)),
                (x1, Fraction(y1, m)),
            )
            for index, (y0, y1) in enumerate(zip(left, right), start=1)
        ]
        logger.debug("grounded family drawn", extra={'m': m, 'attempts': attempt})
        return CurveFamily(curves, (x0, x1))

    raise RetryLimit(f"no generic grounded family of {m} segments in {attempts} draws")
