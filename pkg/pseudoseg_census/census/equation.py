"""
Brute-force check that counting multiset systems reduces to counting set systems.

h(m, n) counts multisets of m subsets of {1..n} whose primal shatter function
stays below c*z^d for every z <= n; h'(m', n) counts sets of m' distinct
subsets with the same property. Dropping repeated rows leaves the shatter
function unchanged, and a multiset with m' distinct rows corresponds to a
composition of m into m' positive multiplicities, so
h(m, n) = sum over m' of h'(m', n) * C(m-1, m'-1).
"""

import logging
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb

from ..config import get_setting
from ..exceptions import BadParams, TooLarge
from ..geometry.curves import as_rat
from ..setsystem.family import SetFamily
from ..setsystem.shatter import primal_shatter


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HRelation:
    """
    Both sides of the multiset/set counting identity.

    Attributes:
        n (int): Ground size.
        m (int): Multiset size.
        c (Rat): Shatter bound constant.
        d (int): Shatter bound exponent.
        h (int): Multiset systems within the shatter bound.
        h_distinct (tuple): h'(m', n) for m' = 1..m.
        rhs (int): sum of h'(m', n) * C(m-1, m'-1).
    """

    n: int
    m: int
    c: object
    d: int
    h: int
    h_distinct: tuple
    rhs: int

    @property
    def holds(self):
        return self.h == self.rhs

    def to_dict(self):
        return {
            'n': self.n,
            'm': self.m,
            'c': str(self.c),
            'd': self.d,
            'h': self.h,
            'h_distinct': list(self.h_distinct),
            'rhs': self.rhs,
            'holds': self.holds,
        }


def _within_bound(rows, n, c, d, cache):
    key = frozenset(rows)
    if key not in cache:
        family = SetFamily(n, tuple(sorted(key)))
        cache[key] = all(primal_shatter(family, z) <= c * z**d for z in range(1, n + 1))
    return cache[key]


def h_relation_counts(n, m, c, d, max_n=None, max_m=None, config=None):
    """
    Count both sides of the identity by exhaustive enumeration.

    Args:
        n (int): Ground size, 1 <= n <= max_n.
        m (int): Multiset size, 1 <= m <= max_m.
        c (Rat): Shatter bound constant.
        d (int): Shatter bound exponent.

    Returns:
        HRelation: The counts.

    Raises:
        TooLarge: If n or m exceeds the enumeration limits.
    """
    if max_n is None:
        max_n = get_setting(config, 'census', 'max_eq1_n')
    if max_m is None:
        max_m = get_setting(config, 'census', 'max_eq1_m')
    if n < 1 or m < 1:
        raise BadParams(f"n and m must be positive, got n={n}, m={m}")
    if n > max_n or m > max_m:
        raise TooLarge(f"(n, m) = ({n}, {m}) exceeds the limits ({max_n}, {max_m})")
    c = as_rat(c)

    subsets = range(2**n)
    cache = {}
    h = sum(
        1 for rows in combinations_with_replacement(subsets, m)
        if _within_bound(rows, n, c, d, cache)
    )
    h_distinct = tuple(
        sum(1 for rows in combinations(subsets, size) if _within_bound(rows, n, c, d, cache))
        for size in range(1, m + 1)
    )
    rhs = sum(count * comb(m - 1, size - 1) for size, count in enumerate(h_distinct, start=1))

    relation = HRelation(n, m, c, d, h, h_distinct, rhs)
    logger.debug("h relation", extra=relation.to_dict())
    return relation


def verify_h_relation(n, m, c, d, config=None):
    """
    True iff h(m, n) equals the weighted sum of distinct-row counts.
    """
    relation = h_relation_counts(n, m, c, d, config=config)
    if not relation.holds:
        logger.warning("h relation failed", extra=relation.to_dict())
    return relation.holds
