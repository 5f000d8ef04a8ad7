"""
Set families over a finite ground set {1..n}.

A subset is stored as an integer bitmask with element e at bit e-1, so the
fixed linear order on subsets is the order of the mask values.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..exceptions import CensusError, SizeMismatch


@dataclass(frozen=True)
class Subset:
    """
    Subset of {1..ground_size} as a bitmask.

    Attributes:
        ground_size (int): n.
        mask (int): Element e is present iff bit e-1 is set.
    """

    ground_size: int
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.ground_size:
            raise CensusError(f"mask {self.mask} does not fit a ground set of {self.ground_size}")

    @classmethod
    def of(cls, ground_size, elements):
        mask = 0
        for element in elements:
            if not 1 <= element <= ground_size:
                raise CensusError(f"element {element} outside [1, {ground_size}]")
            mask |= 1 << (element - 1)
        return cls(ground_size, mask)

    @property
    def elements(self):
        return mask_elements(self.mask)

    def __len__(self):
        return self.mask.bit_count()


def mask_elements(mask):
    """Sorted elements (1-based) of a bitmask."""
    elements = []
    e = 1
    while mask:
        if mask & 1:
            elements.append(e)
        mask >>= 1
        e += 1
    return elements


def sym_diff_distance(a, b):
    """
    Size of the symmetric difference of two subsets.

    Raises:
        SizeMismatch: If the ground sets differ.
    """
    if a.ground_size != b.ground_size:
        raise SizeMismatch(f"ground sizes {a.ground_size} and {b.ground_size} differ")
    return (a.mask ^ b.mask).bit_count()


@dataclass(frozen=True)
class SetFamily:
    """
    Multiset of m >= 1 subsets of {1..n}.

    Attributes:
        ground_size (int): n.
        rows (tuple): Bitmasks, in input order; duplicates allowed.
    """

    ground_size: int
    rows: tuple

    def __post_init__(self):
        rows = tuple(int(row) for row in self.rows)
        if self.ground_size < 1:
            raise CensusError(f"ground size must be positive, got {self.ground_size}")
        if not rows:
            raise CensusError("a set family needs at least one row")
        for row in rows:
            if row < 0 or row >> self.ground_size:
                raise CensusError(f"row {row} does not fit a ground set of {self.ground_size}")
        object.__setattr__(self, 'rows', rows)

    @classmethod
    def from_sets(cls, ground_size, sets):
        return cls(ground_size, tuple(Subset.of(ground_size, s).mask for s in sets))

    @classmethod
    def from_bit_strings(cls, strings):
        """
        Family from membership strings; character c of a row is element c+1.
        """
        strings = [s.strip() for s in strings]
        if not strings:
            raise CensusError("a set family needs at least one row")
        n = len(strings[0])
        rows = []
        for s in strings:
            if len(s) != n or set(s) - {'0', '1'}:
                raise CensusError(f"row {s!r} is not a 0/1 string of length {n}")
            rows.append(int(s[::-1], 2))
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix):
        matrix = np.asarray(matrix, dtype=bool)
        weights = [1 << e for e in range(matrix.shape[1])]
        rows = tuple(sum(w for w, bit in zip(weights, row) if bit) for row in matrix)
        return cls(matrix.shape[1], rows)

    @property
    def m(self):
        return len(self.rows)

    @property
    def n(self):
        return self.ground_size

    def subset(self, index):
        return Subset(self.ground_size, self.rows[index])

    def to_sets(self):
        return [mask_elements(row) for row in self.rows]

    def to_bit_strings(self):
        return [format(row, f'0{self.ground_size}b')[::-1] for row in self.rows]

    @cached_property
    def matrix(self):
        """Boolean membership matrix of shape (m, n)."""
        return np.array(
            [[(row >> e) & 1 for e in range(self.ground_size)] for row in self.rows],
            dtype=bool,
        ).reshape(self.m, self.ground_size)

    def transpose(self):
        """
        Dual family: ground set = rows, one row per ground element (columns
        kept with multiplicity).
        """
        return SetFamily.from_matrix(self.matrix.T)

    def sorted_rows(self):
        return tuple(sorted(self.rows))

    def distinct_rows(self):
        return tuple(sorted(set(self.rows)))

    def multiset_equal(self, other):
        return self.ground_size == other.ground_size and self.sorted_rows() == other.sorted_rows()

    def distance_matrix(self):
        """Pairwise symmetric-difference sizes, shape (m, m)."""
        matrix = self.matrix
        return (matrix[:, None, :] != matrix[None, :, :]).sum(axis=2)


def is_separated(family, delta):
    """
    True iff every two distinct positions are at distance >= delta.

    Args:
        family (SetFamily): The family (duplicates count as distance 0).
        delta (int): Separation threshold.

    Returns:
        bool: Separation status; a one-row family is always separated.
    """
    if family.m < 2:
        return True
    distances = family.distance_matrix()
    upper = distances[np.triu_indices(family.m, k=1)]
    return bool(upper.min() >= delta)
