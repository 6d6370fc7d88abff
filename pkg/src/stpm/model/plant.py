# -*- coding: utf-8 -*-
"""Synthetic plant model."""
from typing import Any
from typing import List
from typing import Optional
from typing import TypedDict

from stpm.exceptions import StpmPlantError


class PlantEventData(TypedDict):
    """Describing one template event: fine offsets inside a coarse granule (1-based)."""

    series: str
    symbol: str
    start: int
    end: int


class _PlantDataBase(TypedDict):
    events: List[PlantEventData]
    season_count: int
    season_density: int
    intra_period: int
    inter_distance: int


class PlantData(_PlantDataBase, total=False):
    """Describing the data structure of a planted seasonal pattern.

    ``relations`` optionally declares the expected relations as
    ``[kind, left, right]`` with 1-based indices into ``events``.
    """

    relations: List[List[Any]]
    first_granule: int
    noise_rate: float


class PlantSpec:
    """Class describing one pattern planted by the synthetic generator.

    The template events are written into every planted granule. Seasons hold
    season_density granules spaced intra_period apart, and consecutive seasons are
    inter_distance apart (last granule of one to first granule of the next).
    """

    def __init__(self, raw_data: PlantData) -> None:
        """Initialize a PlantSpec object.

        Args:
            raw_data: A dictionary describing the plant. The structure is described
                by the PlantData class.

        Raises:
            StpmPlantError: The plant is malformed.
        """
        events = raw_data["events"]
        if len(events) < 2:
            raise StpmPlantError("A plant needs at least 2 template events")
        for event in events:
            if not 1 <= int(event["start"]) <= int(event["end"]):
                raise StpmPlantError(
                    f"Invalid template interval {event['series']}:{event['symbol']}"
                    f" [{event['start']},{event['end']}]"
                )
        for name, value in (
            ("season_count", raw_data["season_count"]),
            ("season_density", raw_data["season_density"]),
            ("intra_period", raw_data["intra_period"]),
            ("inter_distance", raw_data["inter_distance"]),
        ):
            if int(value) < 1:
                raise StpmPlantError(f"{name} must be >= 1, got {value}")
        noise_rate = float(raw_data.get("noise_rate", 0.0))
        if not 0.0 <= noise_rate < 0.5:
            raise StpmPlantError(f"noise_rate must lie in [0, 0.5), got {noise_rate}")
        if int(raw_data.get("first_granule", 1)) < 1:
            raise StpmPlantError("first_granule must be >= 1")
        self.raw_data = raw_data

    @property
    def events(self) -> List[PlantEventData]:
        """Return the template events."""
        return self.raw_data["events"]

    @property
    def relations(self) -> Optional[List[List[Any]]]:
        """Return the declared relations, if any."""
        return self.raw_data.get("relations")

    @property
    def series(self) -> List[str]:
        """Return the distinct series of the template, in template order."""
        return list(dict.fromkeys(event["series"] for event in self.events))

    @property
    def season_count(self) -> int:
        """Return the number of planted seasons."""
        return int(self.raw_data["season_count"])

    @property
    def season_density(self) -> int:
        """Return the number of granules of a season."""
        return int(self.raw_data["season_density"])

    @property
    def intra_period(self) -> int:
        """Return the period between the granules of a season."""
        return int(self.raw_data["intra_period"])

    @property
    def inter_distance(self) -> int:
        """Return the distance between consecutive seasons."""
        return int(self.raw_data["inter_distance"])

    @property
    def first_granule(self) -> int:
        """Return the position of the first planted granule."""
        return int(self.raw_data.get("first_granule", 1))

    @property
    def noise_rate(self) -> float:
        """Return the probability of a symbol flip in the plant series."""
        return float(self.raw_data.get("noise_rate", 0.0))

    def granules(self) -> List[int]:
        """Return the planted coarse granule positions, ascending."""
        positions: List[int] = []
        start = self.first_granule
        for _ in range(self.season_count):
            season = [
                start + index * self.intra_period
                for index in range(self.season_density)
            ]
            positions.extend(season)
            start = season[-1] + self.inter_distance
        return positions
