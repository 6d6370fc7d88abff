# -*- coding: utf-8 -*-
"""Temporal relation model."""
from enum import Enum
from typing import NamedTuple
from typing import TypedDict

from stpm.exceptions import StpmConfigError


class RelationKind(str, Enum):
    """The three temporal relations between two event instances."""

    FOLLOWS = "Follows"
    CONTAINS = "Contains"
    OVERLAPS = "Overlaps"

    @property
    def arrow(self) -> str:
        """Return the short infix notation of the relation."""
        return _ARROWS[self]


_ARROWS = {
    RelationKind.FOLLOWS: "->",
    RelationKind.CONTAINS: "≽",
    RelationKind.OVERLAPS: "≬",
}


class Triple(NamedTuple):
    """A relation between the events at 0-based indices left < right of a pattern."""

    relation: RelationKind
    left: int
    right: int


class RelationConfigData(TypedDict):
    """Describing the data structure of the relation settings."""

    epsilon: int
    min_overlap: int


class RelationConfig:
    """Class holding the tolerance buffer and the minimal overlap duration.

    Attributes:
        epsilon: Tolerance buffer in fine granules.
        min_overlap: Minimal overlap duration d_o in fine granules.
    """

    def __init__(self, raw_data: RelationConfigData) -> None:
        """Initialize a RelationConfig object.

        Args:
            raw_data: A dictionary describing the settings. The structure is described
                by the RelationConfigData class.

        Raises:
            StpmConfigError: epsilon is negative or min_overlap <= 2 * epsilon.
        """
        epsilon, min_overlap = int(raw_data["epsilon"]), int(raw_data["min_overlap"])
        if epsilon < 0:
            raise StpmConfigError(f"epsilon must be >= 0, got {epsilon}")
        if min_overlap < 1 or min_overlap <= 2 * epsilon:
            raise StpmConfigError(
                f"min_overlap must be positive and > 2 * epsilon, got {min_overlap}"
                f" with epsilon {epsilon}"
            )
        self.raw_data: RelationConfigData = {
            "epsilon": epsilon,
            "min_overlap": min_overlap,
        }

    @classmethod
    def of(cls, epsilon: int = 0, min_overlap: int = 1) -> "RelationConfig":
        """Build a RelationConfig from its two values."""
        return cls({"epsilon": epsilon, "min_overlap": min_overlap})

    @property
    def epsilon(self) -> int:
        """Return the tolerance buffer."""
        return self.raw_data["epsilon"]

    @property
    def min_overlap(self) -> int:
        """Return the minimal overlap duration."""
        return self.raw_data["min_overlap"]
