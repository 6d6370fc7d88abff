# -*- coding: utf-8 -*-
"""Support sets, near support sets, seasons and the frequent seasonal verdict."""
from fractions import Fraction
from typing import Collection
from typing import List
from typing import Sequence
from typing import Tuple
from typing import Union

import numpy as np

from .model.season import ResolvedSeasonConfig
from .model.season import SeasonAnalysis


def max_season(sup: Collection[int], min_density: int) -> Fraction:
    """Return the upper bound |SUP| / minDensity on the number of seasons.

    Args:
        sup: Ascending support set.
        min_density: Minimal density of a season, at least 1.

    Returns:
        The bound as an exact rational.

    Example:
        >>> max_season([1, 2, 3, 7, 8, 11, 12, 14], 3)
        Fraction(8, 3)
    """
    return Fraction(len(sup), min_density)


def is_candidate(sup: Collection[int], cfg: ResolvedSeasonConfig) -> bool:
    """Return True if maxSeason can reach minSeason (|SUP| >= minSeason*minDensity)."""
    return len(sup) >= cfg.candidate_size


def near_support_sets(
    sup: Sequence[int], max_period: int
) -> List[Tuple[int, ...]]:
    """Split a support set into maximal runs of granules at most max_period apart.

    Args:
        sup: Ascending support set.
        max_period: Maximal period between consecutive granules of a run.

    Returns:
        The near support sets, in order.

    Example:
        >>> near_support_sets([1, 2, 3, 7, 8, 11, 12, 14], 2)
        [(1, 2, 3), (7, 8), (11, 12, 14)]
    """
    near_sets: List[Tuple[int, ...]] = []
    current: List[int] = []
    for position in sup:
        if current and position - current[-1] > max_period:
            near_sets.append(tuple(current))
            current = []
        current.append(position)
    if current:
        near_sets.append(tuple(current))
    return near_sets


def analyze(sup: Sequence[int], cfg: ResolvedSeasonConfig) -> SeasonAnalysis:
    """Compute the seasons of a support set and decide if it is frequent seasonal.

    Near support sets below minDensity are dropped and do not interrupt the distance
    chain: distances are measured between consecutive surviving seasons, from the
    last granule of one to the first granule of the next.

    Args:
        sup: Ascending support set.
        cfg: Resolved seasonality thresholds.

    Returns:
        The season analysis.
    """
    near_sets = near_support_sets(sup, cfg.max_period)
    seasons = [near for near in near_sets if len(near) >= cfg.min_density]
    distances = [nxt[0] - prev[-1] for prev, nxt in zip(seasons, seasons[1:])]
    frequent = len(seasons) >= cfg.min_season and all(
        cfg.dist_min <= distance <= cfg.dist_max for distance in distances
    )
    return SeasonAnalysis(
        near_sets=tuple(near_sets),
        seasons=tuple(seasons),
        distances=tuple(distances),
        is_frequent_seasonal=frequent,
    )


def is_frequent_seasonal(
    sup: Union[Sequence[int], np.ndarray], cfg: ResolvedSeasonConfig
) -> bool:
    """Return the verdict of analyze without building the seasons.

    Args:
        sup: Ascending support set.
        cfg: Resolved seasonality thresholds.

    Returns:
        True if the support set is frequent seasonal.
    """
    if len(sup) < cfg.candidate_size:
        return False
    positions = np.asarray(sup, dtype=np.int64)
    breaks = np.flatnonzero(np.diff(positions) > cfg.max_period) + 1
    starts = np.concatenate(([0], breaks))
    stops = np.concatenate((breaks, [len(positions)]))
    dense = stops - starts >= cfg.min_density
    if np.count_nonzero(dense) < cfg.min_season:
        return False
    distances = positions[starts[dense][1:]] - positions[stops[dense][:-1] - 1]
    return bool(np.all((distances >= cfg.dist_min) & (distances <= cfg.dist_max)))
