"""
Weak cuttings by random sampling.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from ..config import get_setting
from ..exceptions import BadParams, NotDoubleGrounded, RetryLimit
from ..geometry.curves import as_rat
from ..geometry.predicates import grounds_of
from .decomposition import vertical_decomposition


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CuttingResult:
    """
    Accepted weak cutting.

    Attributes:
        sample (tuple): Sampled curve labels, in family order.
        decomposition (VerticalDecomposition): Decomposition of the sample with
            crossing lists for the whole family.
        r (Rat): Cutting parameter.
        attempts (int): Samples drawn until acceptance.
    """

    sample: tuple
    decomposition: object
    r: object
    attempts: int

    @property
    def max_crossing(self):
        return self.decomposition.max_crossing

    def to_dict(self):
        return {
            'sample': list(self.sample),
            'sample_size': len(self.sample),
            'r': str(self.r),
            'cell_count': self.decomposition.cell_count,
            'max_cell_crossing': self.max_crossing,
            'attempts': self.attempts,
        }


def sample_size(m, r, factor=6):
    """min(ceil(factor * r * ln m), m)."""
    return min(math.ceil(factor * float(r) * math.log(m)), m)


def weak_cutting(family, r, seed, factor=None, retry_limit=None, config=None):
    """
    Las Vegas weak cutting of a double-grounded pseudo-segment family.

    Draws a uniform sample without replacement, decomposes it and accepts when
    the interior of every cell meets at most m/r curves of the family;
    otherwise redraws.

    Args:
        family (CurveFamily): m >= 2 double-grounded pseudo-segments.
        r (Rat): 1 <= r <= m.
        seed (int or numpy.random.Generator): Randomness source.
        factor (int, optional): Sample-size factor.
        retry_limit (int, optional): Attempts before giving up.
        config (dict, optional): Configuration supplying defaults.

    Returns:
        CuttingResult: The accepted cutting.

    Raises:
        RetryLimit: If no sample was accepted within the limit.
    """
    if factor is None:
        factor = get_setting(config, 'arrangement', 'cutting_sample_factor')
    if retry_limit is None:
        retry_limit = get_setting(config, 'arrangement', 'cutting_retry_limit')
    m = len(family)
    r = as_rat(r)
    if m < 2:
        raise BadParams(f"a cutting needs at least 2 curves, got {m}")
    if not 1 <= r <= m:
        raise BadParams(f"r must lie in [1, {m}], got {r}")
    grounds = grounds_of(family)
    if grounds is None:
        raise NotDoubleGrounded("every curve must start and end on the two grounds")

    rng = np.random.default_rng(seed)
    size = sample_size(m, r, factor)
    for attempt in range(1, retry_limit + 1):
        picked = sorted(int(i) for i in rng.choice(m, size=size, replace=False))
        sample = family.subfamily([family.curves[i].id for i in picked])
        decomposition = vertical_decomposition(sample, *grounds, queries=family)
        if all(len(cell.crossings) * r <= m for cell in decomposition.cells):
            logger.info(
                "weak cutting accepted",
                extra={'m': m, 'r': str(r), 'sample': size, 'attempts': attempt,
                       'cells': decomposition.cell_count},
            )
            return CuttingResult(sample.labels, decomposition, r, attempt)
        logger.debug("weak cutting rejected", extra={'attempt': attempt})

    raise RetryLimit(f"no accepted sample in {retry_limit} attempts")
