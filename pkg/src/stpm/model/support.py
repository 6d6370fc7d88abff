# -*- coding: utf-8 -*-
"""Support sets stored as packed bitmaps over the coarse granules."""
from typing import Iterable
from typing import Iterator
from typing import Tuple
from typing import Union

import numpy as np

# number of set bits of every byte value
_POPCOUNT = np.array([bin(value).count("1") for value in range(256)], dtype=np.int64)


class SupportSet:
    """Ascending set of 1-based granule positions, one bit per granule.

    Bit p stands for granule p and bit 0 is never set. The sets of one database all
    have the same length, so that intersection and union are a single bytewise
    operation.

    Attributes:
        n_granules: Number N of coarse granules of the database.
    """

    __slots__ = ("_bits", "n_granules", "_count")

    def __init__(self, bits: np.ndarray, n_granules: int) -> None:
        """Initialize a SupportSet object.

        Args:
            bits: The packed bitmap of N + 1 bits (see numpy.packbits).
            n_granules: Number N of coarse granules.
        """
        self._bits = bits
        self.n_granules = n_granules
        self._count = int(_POPCOUNT[bits].sum())

    @classmethod
    def from_mask(cls, mask: np.ndarray) -> "SupportSet":
        """Build a SupportSet from a boolean array indexed by granule position."""
        return cls(np.packbits(mask), len(mask) - 1)

    @classmethod
    def from_positions(
        cls, positions: Union[Iterable[int], np.ndarray], n_granules: int
    ) -> "SupportSet":
        """Build a SupportSet from granule positions, duplicates allowed.

        Args:
            positions: 1-based granule positions, at most n_granules.
            n_granules: Number N of coarse granules.

        Returns:
            The support set.
        """
        mask = np.zeros(n_granules + 1, dtype=bool)
        if isinstance(positions, np.ndarray):
            mask[positions] = True
        else:
            mask[np.fromiter(positions, dtype=np.int64)] = True
        return cls.from_mask(mask)

    def mask(self) -> np.ndarray:
        """Return the boolean array of N + 1 entries indexed by granule position."""
        return np.unpackbits(self._bits, count=self.n_granules + 1).view(bool)

    def positions(self) -> np.ndarray:
        """Return the ascending granule positions."""
        return np.flatnonzero(np.unpackbits(self._bits, count=self.n_granules + 1))

    def to_tuple(self) -> Tuple[int, ...]:
        """Return the ascending granule positions as a tuple."""
        return tuple(self.positions().tolist())

    def issubset(self, other: "SupportSet") -> bool:
        """Return True if every granule of this set is in other."""
        return bool(np.array_equal(np.bitwise_and(self._bits, other._bits), self._bits))

    def __and__(self, other: "SupportSet") -> "SupportSet":
        """Return the granules present in both sets."""
        return SupportSet(np.bitwise_and(self._bits, other._bits), self.n_granules)

    def __or__(self, other: "SupportSet") -> "SupportSet":
        """Return the granules present in either set."""
        return SupportSet(np.bitwise_or(self._bits, other._bits), self.n_granules)

    def __len__(self) -> int:
        """Return the number of granules of the set."""
        return self._count

    def __iter__(self) -> Iterator[int]:
        """Iterate over the granule positions in ascending order."""
        return iter(self.positions().tolist())

    def __contains__(self, position: object) -> bool:
        """Return True if the granule position is in the set."""
        if not isinstance(position, int) or not 0 < position <= self.n_granules:
            return False
        return bool(self._bits[position >> 3] & (0x80 >> (position & 7)))

    def __eq__(self, other: object) -> bool:
        """Compare the granules of two sets."""
        if not isinstance(other, SupportSet):
            return NotImplemented
        return self.n_granules == other.n_granules and bool(
            np.array_equal(self._bits, other._bits)
        )

    def __repr__(self) -> str:
        """Return the positions form."""
        return f"SupportSet({list(self)})"
