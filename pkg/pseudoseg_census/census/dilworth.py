"""
Permutation posets and their Dilworth coloring.
"""

from bisect import bisect_right
from dataclasses import dataclass

from ..exceptions import CensusError, NotDoubleGrounded
from ..geometry.graphs import LabelledGraph
from ..geometry.predicates import grounds_of


@dataclass(frozen=True)
class PermutationPoset:
    """
    Two-dimensional poset given by a permutation of 1..t.

    Attributes:
        permutation (tuple): pi(1)..pi(t).
    """

    permutation: tuple

    def __post_init__(self):
        permutation = tuple(int(value) for value in self.permutation)
        if sorted(permutation) != list(range(1, len(permutation) + 1)):
            raise CensusError(f"{permutation} is not a permutation of 1..{len(permutation)}")
        object.__setattr__(self, 'permutation', permutation)

    @property
    def t(self):
        return len(self.permutation)

    @classmethod
    def from_through_curves(cls, family):
        """
        Permutation realized by double-grounded curves: pi(i) is the right
        ground rank of the curve with left ground rank i.
        """
        if grounds_of(family) is None:
            raise NotDoubleGrounded("through-curves must span the strip")
        left = sorted(family.curves, key=lambda curve: curve.left_endpoint[1])
        right_rank = {
            curve.id: rank
            for rank, curve in enumerate(
                sorted(family.curves, key=lambda curve: curve.right_endpoint[1]), start=1
            )
        }
        return cls(tuple(right_rank[curve.id] for curve in left))

    def crossing_graph(self):
        """Inversion graph on positions '1'..'t'."""
        pi = self.permutation
        edges = frozenset(
            (str(i + 1), str(j + 1))
            for i in range(self.t)
            for j in range(i + 1, self.t)
            if pi[i] > pi[j]
        )
        return LabelledGraph(tuple(str(i) for i in range(1, self.t + 1)), edges)


def dilworth_color(poset):
    """
    Partition positions into increasing subsequences of the permutation.

    Each value goes on the leftmost pile whose top is smaller; pile tops stay
    decreasing from left to right, so the pile count equals the longest
    decreasing subsequence.

    Args:
        poset (PermutationPoset): The poset.

    Returns:
        list: Color classes as sorted lists of 1-based positions.
    """
    negated_tops = []
    piles = []
    for position, value in enumerate(poset.permutation, start=1):
        slot = bisect_right(negated_tops, -value)
        if slot == len(piles):
            piles.append([position])
            negated_tops.append(-value)
        else:
            piles[slot].append(position)
            negated_tops[slot] = -value
    return piles


def longest_decreasing_length(poset):
    """Length of the longest strictly decreasing subsequence."""
    return len(dilworth_color(poset))
