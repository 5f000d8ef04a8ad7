"""
Greedy farthest-first ordering and the empirical packing check.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..config import get_setting
from ..exceptions import BudgetExceeded, ShatterHypothesisFailed
from ..geometry.curves import as_rat
from .shatter import primal_shatter


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GreedyOrdering:
    """
    Farthest-first order of a family.

    Attributes:
        order (tuple): Row indices S_1..S_m.
        pointers (tuple): j_2..j_m, 1-based positions into the order.
        deltas (tuple): delta_2..delta_m with delta_i = d(S_i, S_{j_i}).
    """

    order: tuple
    pointers: tuple
    deltas: tuple


def greedy_ordering(family):
    """
    Order rows so each next row is farthest from those already chosen.

    S_1 is the least row in mask order. Each later S_i maximizes the distance
    to its nearest chosen row (ties go to the least mask, then the least row
    index) and j_i is the earliest chosen position at that distance.

    Args:
        family (SetFamily): The family.

    Returns:
        GreedyOrdering: The ordering, with non-increasing deltas.
    """
    m = family.m
    matrix = family.matrix
    rank = sorted(range(m), key=lambda index: (family.rows[index], index))
    position_of_rank = np.empty(m, dtype=np.int64)
    position_of_rank[rank] = np.arange(m)

    remaining = np.ones(m, dtype=bool)
    nearest = np.full(m, np.iinfo(np.int64).max, dtype=np.int64)
    pointer = np.zeros(m, dtype=np.int64)

    first = rank[0]
    order = [first]
    pointers = []
    deltas = []
    remaining[first] = False
    latest = first

    for position in range(1, m):
        distances = (matrix != matrix[latest]).sum(axis=1)
        closer = remaining & (distances < nearest)
        nearest[closer] = distances[closer]
        pointer[closer] = position

        candidates = np.flatnonzero(remaining)
        delta = nearest[candidates].max()
        tied = candidates[nearest[candidates] == delta]
        chosen = int(tied[np.argmin(position_of_rank[tied])])

        order.append(chosen)
        pointers.append(int(pointer[chosen]))
        deltas.append(int(delta))
        remaining[chosen] = False
        latest = chosen

    return GreedyOrdering(tuple(order), tuple(pointers), tuple(deltas))


@dataclass(frozen=True)
class PackingReport:
    """
    Outcome of packing_check.

    Attributes:
        max_ratio (Fraction, optional): Largest i * (delta_i / n)^d, or None
            when no delta is positive.
        per_prefix (list): Dicts with keys i, delta, ratio.
        unverified (tuple): Values of z whose shatter search ran over budget.
    """

    max_ratio: Fraction
    per_prefix: list
    unverified: tuple = ()

    def to_dict(self):
        return {
            'max_ratio': None if self.max_ratio is None else str(self.max_ratio),
            'per_prefix': [
                {'i': row['i'], 'delta': row['delta'], 'ratio': str(row['ratio'])}
                for row in self.per_prefix
            ],
            'unverified': list(self.unverified),
        }


def packing_check(family, c, d, z_max=None, work_budget=None, config=None):
    """
    Instantiate the packing bound on a family of bounded shatter function.

    Values of z with min(2^z, distinct rows) <= c * z^d hold trivially and are
    skipped. A z whose exact search is over budget is reported as unverified.

    Args:
        family (SetFamily): The family.
        c (Rat): Shatter constant.
        d (int): Shatter exponent.
        z_max (int, optional): Largest z for the hypothesis check.
        work_budget (int, optional): Budget for the shatter computations.
        config (dict, optional): Configuration supplying defaults.

    Returns:
        PackingReport: Ratios i * (delta_i / n)^d for every positive delta_i.

    Raises:
        ShatterHypothesisFailed: If primal_shatter(z) > c * z^d for some z <= z_max.
    """
    c = as_rat(c)
    if z_max is None:
        z_max = get_setting(config, 'setsystem', 'pack_z_max')
    distinct = len(set(family.rows))
    unverified = []
    for z in range(1, min(z_max, family.n) + 1):
        bound = c * z**d
        if min(2**z, distinct) <= bound:
            continue
        try:
            value = primal_shatter(family, z, work_budget, config)
        except BudgetExceeded as error:
            logger.warning("shatter hypothesis unverified", extra={'z': z, 'reason': str(error)})
            unverified.append(z)
            continue
        if value > bound:
            raise ShatterHypothesisFailed(z, value, bound)

    ordering = greedy_ordering(family)
    per_prefix = []
    for i, delta in enumerate(ordering.deltas, start=2):
        if delta > 0:
            ratio = i * Fraction(delta, family.n) ** d
            per_prefix.append({'i': i, 'delta': delta, 'ratio': ratio})

    max_ratio = max((row['ratio'] for row in per_prefix), default=None)
    logger.info(
        "packing check",
        extra={'n': family.n, 'm': family.m, 'max_ratio': str(max_ratio)},
    )
    return PackingReport(max_ratio, per_prefix, tuple(unverified))
