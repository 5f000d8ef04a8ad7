"""
Exact primal and dual shatter functions and VC-dimension.
"""

import logging
from itertools import combinations
from math import comb

import numpy as np

from ..config import get_setting
from ..exceptions import BudgetExceeded


logger = logging.getLogger(__name__)


def _check_budget(family, z, work_budget):
    work = comb(family.ground_size, z) * family.m
    if work > work_budget:
        raise BudgetExceeded(
            f"C({family.ground_size}, {z}) * {family.m} = {work} trace operations "
            f"exceed the budget of {work_budget}"
        )


def trace_count(family, columns):
    """Number of distinct traces of the family on the given ground indices (0-based)."""
    if not columns:
        return 1
    return len(np.unique(family.matrix[:, list(columns)], axis=0))


def primal_shatter(family, z, work_budget=None, config=None):
    """
    Maximum number of distinct traces on a z-subset of the ground set.

    Args:
        family (SetFamily): The family.
        z (int): Subset size; values above n are clamped to n.
        work_budget (int, optional): Cap on C(n, z) * m.
        config (dict, optional): Configuration supplying the budget.

    Returns:
        int: The primal shatter value.

    Raises:
        BudgetExceeded: If the exact search is over budget.
    """
    if work_budget is None:
        work_budget = get_setting(config, 'setsystem', 'work_budget')
    z = min(max(z, 0), family.ground_size)
    if z == 0:
        return 1
    _check_budget(family, z, work_budget)

    ceiling = min(2**z, len(set(family.rows)))
    best = 0
    for columns in combinations(range(family.ground_size), z):
        best = max(best, trace_count(family, columns))
        if best == ceiling:
            break
    return best


def dual_shatter(family, z, work_budget=None, config=None):
    """
    Primal shatter function of the transposed family.

    Args:
        family (SetFamily): The family.
        z (int): Number of rows to trace on (clamped to m).

    Returns:
        int: The dual shatter value.
    """
    return primal_shatter(family.transpose(), z, work_budget, config)


def shattered_subset(family, d, work_budget=None, config=None):
    """
    A d-subset (1-based elements) all of whose 2^d subsets arise as traces.

    Returns:
        tuple or None: The first such subset in lexicographic order, if any.
    """
    if work_budget is None:
        work_budget = get_setting(config, 'setsystem', 'work_budget')
    if d == 0:
        return ()
    if d > family.ground_size or 2**d > len(set(family.rows)):
        return None
    _check_budget(family, d, work_budget)
    for columns in combinations(range(family.ground_size), d):
        if trace_count(family, columns) == 2**d:
            return tuple(c + 1 for c in columns)
    return None


def vc_dimension(family, work_budget=None, config=None):
    """
    Largest d such that some d-subset of the ground set is shattered.

    Args:
        family (SetFamily): The family.
        work_budget (int, optional): Cap on C(n, d) * m per size tried.
        config (dict, optional): Configuration supplying the budget.

    Returns:
        int: The VC-dimension.

    Raises:
        BudgetExceeded: If a size to try is over budget.
    """
    d = 0
    while shattered_subset(family, d + 1, work_budget, config) is not None:
        d += 1
    logger.debug("vc dimension", extra={'n': family.n, 'm': family.m, 'vc': d})
    return d


def sauer_shelah_bound(z, d):
    """Sum of C(z, i) for i <= d."""
    return sum(comb(z, i) for i in range(d + 1))
