# -*- coding: utf-8 -*-
"""Time granularity model."""
from typing import Tuple
from typing import TypedDict

from stpm.exceptions import StpmConfigError


class GranularityData(TypedDict):
    """Describing the data structure of a granularity declaration."""

    fine_unit_label: str
    factor_m: int


class GranularitySpec:
    """Class describing a fine granularity G that is m-finer than a coarse one H.

    Attributes:
        fine_unit_label: Name of the fine unit (e.g. "hour").
        factor_m: Number of fine granules per coarse granule.
    """

    def __init__(self, raw_data: GranularityData) -> None:
        """Initialize a GranularitySpec object.

        Args:
            raw_data: A dictionary describing the granularity. The structure is
                described by the GranularityData class.

        Raises:
            StpmConfigError: factor_m is not a positive integer.
        """
        if int(raw_data["factor_m"]) < 1:
            raise StpmConfigError(
                f"factor_m must be a positive integer, got {raw_data['factor_m']}"
            )
        self.raw_data = raw_data

    @classmethod
    def of(cls, factor_m: int, fine_unit_label: str = "granule") -> "GranularitySpec":
        """Build a GranularitySpec from its factor."""
        return cls({"fine_unit_label": fine_unit_label, "factor_m": factor_m})

    @property
    def fine_unit_label(self) -> str:
        """Return the name of the fine unit."""
        return self.raw_data["fine_unit_label"]

    @property
    def factor_m(self) -> int:
        """Return the number of fine granules per coarse granule."""
        return int(self.raw_data["factor_m"])

    def coarse_count(self, length: int) -> int:
        """Return the number of complete coarse granules in a fine-granule length."""
        return length // self.factor_m

    def fine_span(self, position: int) -> Tuple[int, int]:
        """Return the first and last fine positions of a coarse granule.

        Args:
            position: 1-based coarse granule position.

        Returns:
            The inclusive fine-granularity bounds of the coarse granule.
        """
        return (position - 1) * self.factor_m + 1, position * self.factor_m
