# -*- coding: utf-8 -*-
"""Seasonality thresholds and analysis model."""
import logging
from typing import List
from typing import NamedTuple
from typing import Tuple
from typing import TypedDict
from typing import Union

from stpm.exceptions import StpmConfigError
from stpm.helpers import resolve_threshold

_LOGGER = logging.getLogger(__name__)


class SeasonConfigData(TypedDict):
    """Describing the data structure of the seasonality thresholds.

    max_period and min_density accept an integer or a ``"K%"`` string.
    """

    max_period: Union[int, str]
    min_density: Union[int, str]
    dist_interval: List[int]
    min_season: int


class ResolvedSeasonConfig(NamedTuple):
    """Seasonality thresholds resolved to absolute granule counts."""

    max_period: int
    min_density: int
    dist_min: int
    dist_max: int
    min_season: int

    @property
    def candidate_size(self) -> int:
        """Return the minimal support size of a candidate (minSeason * minDensity)."""
        return self.min_season * self.min_density


class SeasonConfig:
    """Class holding the seasonality thresholds as configured.

    Attributes:
        max_period: Maximal period between consecutive granules of a near support set.
        min_density: Minimal number of granules of a season.
        dist_interval: Allowed [min, max] distance between consecutive seasons.
        min_season: Minimal number of seasons.
    """

    def __init__(self, raw_data: SeasonConfigData) -> None:
        """Initialize a SeasonConfig object.

        Args:
            raw_data: A dictionary describing the thresholds. The structure is
                described by the SeasonConfigData class.

        Raises:
            StpmConfigError: A threshold is invalid.
        """
        dist_interval = [int(value) for value in raw_data["dist_interval"]]
        if len(dist_interval) != 2:
            raise StpmConfigError(
                f"dist_interval needs two values, got {raw_data['dist_interval']}"
            )
        if dist_interval[0] < 1 or dist_interval[0] > dist_interval[1]:
            raise StpmConfigError(
                f"dist_interval must satisfy 1 <= min <= max, got {dist_interval}"
            )
        if int(raw_data["min_season"]) < 1:
            raise StpmConfigError(
                f"min_season must be >= 1, got {raw_data['min_season']}"
            )
        # percentages are checked at resolution time against the database size
        for name, value in (
            ("max_period", raw_data["max_period"]),
            ("min_density", raw_data["min_density"]),
        ):
            if not (isinstance(value, str) and value.strip().endswith("%")):
                resolve_threshold(value, 1, name)
        self.raw_data: SeasonConfigData = {
            "max_period": raw_data["max_period"],
            "min_density": raw_data["min_density"],
            "dist_interval": dist_interval,
            "min_season": int(raw_data["min_season"]),
        }

    @classmethod
    def of(
        cls,
        max_period: Union[int, str],
        min_density: Union[int, str],
        dist_interval: Tuple[int, int],
        min_season: int,
    ) -> "SeasonConfig":
        """Build a SeasonConfig from its four thresholds."""
        return cls(
            {
                "max_period": max_period,
                "min_density": min_density,
                "dist_interval": list(dist_interval),
                "min_season": min_season,
            }
        )

    @property
    def max_period(self) -> Union[int, str]:
        """Return the configured maximal period."""
        return self.raw_data["max_period"]

    @property
    def min_density(self) -> Union[int, str]:
        """Return the configured minimal density."""
        return self.raw_data["min_density"]

    @property
    def dist_interval(self) -> Tuple[int, int]:
        """Return the allowed distance interval between seasons."""
        low, high = self.raw_data["dist_interval"]
        return low, high

    @property
    def min_season(self) -> int:
        """Return the minimal number of seasons."""
        return self.raw_data["min_season"]

    def resolve(self, n_granules: int) -> ResolvedSeasonConfig:
        """Resolve percentage thresholds against the number of coarse granules.

        Args:
            n_granules: Number N of coarse granules of the sequence database.

        Returns:
            The thresholds as absolute granule counts.
        """
        max_period = resolve_threshold(self.max_period, n_granules, "max_period")
        min_density = resolve_threshold(self.min_density, n_granules, "min_density")
        dist_min, dist_max = self.dist_interval
        resolved = ResolvedSeasonConfig(
            max_period, min_density, dist_min, dist_max, self.min_season
        )
        _LOGGER.info(
            "Resolved thresholds for N=%d: maxPeriod=%d minDensity=%d"
            " distInterval=[%d,%d] minSeason=%d",
            n_granules,
            *resolved,
        )
        return resolved


class SeasonAnalysis(NamedTuple):
    """Seasons of a support set and the frequent seasonal verdict."""

    near_sets: Tuple[Tuple[int, ...], ...]
    seasons: Tuple[Tuple[int, ...], ...]
    distances: Tuple[int, ...]
    is_frequent_seasonal: bool

    @property
    def season_count(self) -> int:
        """Return the number of seasons."""
        return len(self.seasons)
