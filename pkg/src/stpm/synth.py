# -*- coding: utf-8 -*-
"""Synthetic symbolic databases with planted seasonal temporal patterns."""
import logging
from itertools import groupby
from typing import Dict
from typing import Iterable
from typing import List
from typing import Sequence
from typing import Set

import numpy as np

from .exceptions import StpmPlantError
from .model.database import Event
from .model.database import EventInstance
from .model.database import instance_order
from .model.granularity import GranularitySpec
from .model.pattern import TemporalPattern
from .model.plant import PlantSpec
from .model.relation import RelationConfig
from .model.relation import RelationKind
from .model.relation import Triple
from .model.season import SeasonConfig
from .model.symbols import SymbolicDatabase
from .model.symbols import SymbolicSeries
from .model.symbols import SymbolMapping
from .relations import classify

_LOGGER = logging.getLogger(__name__)

BINARY = ("0", "1")


def series_names(n_series: int) -> List[str]:
    """Return the generated series ids S1, S2, ..."""
    return [f"S{index}" for index in range(1, n_series + 1)]


def random_database(
    n_series: int,
    length: int,
    rng: np.random.Generator,
    alphabet: Sequence[str] = BINARY,
) -> SymbolicDatabase:
    """Draw uniformly random symbolic series.

    Args:
        n_series: Number of series.
        length: Number of fine granules.
        rng: Random generator.
        alphabet: Optional; Ordered symbols, binary by default.

    Returns:
        The symbolic database, series named S1, S2, ...
    """
    symbols = rng.integers(0, len(alphabet), size=(n_series, length))
    return SymbolicDatabase(
        [
            SymbolicSeries(name, tuple(row.tolist()), tuple(alphabet))
            for name, row in zip(series_names(n_series), symbols)
        ]
    )


def _template_instances(plant: PlantSpec) -> List[EventInstance]:
    return [
        EventInstance(
            Event(event["series"], str(event["symbol"])),
            int(event["start"]),
            int(event["end"]),
        )
        for event in plant.events
    ]


def planted_pattern(plant: PlantSpec) -> TemporalPattern:
    """Return the pattern realized by the template of a plant.

    Relations are derived from the template intervals with the default relation
    settings (no tolerance buffer, minimal overlap of one fine granule).

    Args:
        plant: The plant.

    Returns:
        The pattern in canonical form.

    Raises:
        StpmPlantError: Two template events repeat an event, or a declared relation
            does not match the template intervals.
    """
    cfg = RelationConfig.of()
    template = _template_instances(plant)
    if len({instance.event for instance in template}) != len(template):
        raise StpmPlantError("A plant template repeats an event")

    for kind, left, right in plant.relations or []:
        first, second = sorted(
            (template[int(left) - 1], template[int(right) - 1]), key=instance_order
        )
        actual = classify(first, second, cfg)
        if actual is None or actual != RelationKind(kind):
            raise StpmPlantError(
                f"Declared {kind} between {first} and {second}, intervals give {actual}"
            )

    ordered = sorted(template, key=instance_order)
    triples = []
    for i, first in enumerate(ordered):
        for j in range(i + 1, len(ordered)):
            relation = classify(first, ordered[j], cfg)
            if relation is None:
                raise StpmPlantError(f"No relation between {first} and {ordered[j]}")
            triples.append(Triple(relation, i, j))
    return TemporalPattern(
        tuple(instance.event for instance in ordered), tuple(triples)
    )


def planted_patterns(plants: Iterable[PlantSpec]) -> List[TemporalPattern]:
    """Return the patterns of a list of plants, in plant order."""
    return [planted_pattern(plant) for plant in plants]


def declared_season_config(plants: Sequence[PlantSpec]) -> SeasonConfig:
    """Return the thresholds under which every plant is frequent seasonal.

    Args:
        plants: The plants, at least one.

    Returns:
        maxPeriod = largest intra-season period, minDensity = smallest season
        density, distInterval = [smallest, largest] inter-season distance and
        minSeason = smallest season count.

    Raises:
        StpmPlantError: No plant is given.
    """
    if not plants:
        raise StpmPlantError("At least one plant is needed to declare thresholds")
    return SeasonConfig.of(
        max_period=max(plant.intra_period for plant in plants),
        min_density=min(plant.season_density for plant in plants),
        dist_interval=(
            min(plant.inter_distance for plant in plants),
            max(plant.inter_distance for plant in plants),
        ),
        min_season=min(plant.season_count for plant in plants),
    )


def _plant_rows(
    plant: PlantSpec, factor_m: int, lookup: Dict[str, int]
) -> Dict[str, List[int]]:
    """Return, per plant series, the symbol indices of one planted granule."""
    rows = {series: [0] * factor_m for series in plant.series}
    written: Dict[str, Set[int]] = {series: set() for series in plant.series}
    for event in plant.events:
        symbol = str(event["symbol"])
        if symbol not in lookup:
            raise StpmPlantError(f"Symbol {symbol!r} is not in the alphabet")
        if lookup[symbol] == 0:
            raise StpmPlantError(
                f"Template symbol {symbol!r} is the background symbol"
            )
        if int(event["end"]) > factor_m:
            raise StpmPlantError(
                f"Template interval [{event['start']},{event['end']}] exceeds a granule"
                f" of {factor_m} fine granules"
            )
        span = set(range(int(event["start"]), int(event["end"]) + 1))
        if span & written[event["series"]]:
            raise StpmPlantError(f"Overlapping template events in {event['series']}")
        written[event["series"]].update(span)
        for offset in span:
            rows[event["series"]][offset - 1] = lookup[symbol]

    # every template interval must come back as one instance of its own
    for event in plant.events:
        row = rows[event["series"]]
        start = 1
        runs = set()
        for index, run in groupby(row):
            length = sum(1 for _ in run)
            runs.add((index, start, start + length - 1))
            start += length
        key = (lookup[str(event["symbol"])], int(event["start"]), int(event["end"]))
        if key not in runs:
            raise StpmPlantError(
                f"Template interval {event['series']}:{event['symbol']}"
                f" [{event['start']},{event['end']}] is not a maximal run"
            )
    return rows


def generate(
    n_series: int,
    n_granules: int,
    plants: Sequence[PlantSpec],
    seed: int,
    *,
    factor_m: int = 3,
    alphabet: Sequence[str] = BINARY,
) -> SymbolicDatabase:
    """Generate a symbolic database holding planted seasonal patterns.

    Plant series carry the first symbol of the alphabet outside the planted
    intervals and get their symbols flipped with the plant's noise rate. The other
    series are uniformly random.

    Args:
        n_series: Number of series, named S1, S2, ...
        n_granules: Number of coarse granules.
        plants: The plants. Each series belongs to at most one plant.
        seed: Seed of the random generator.
        factor_m: Optional; Fine granules per coarse granule.
        alphabet: Optional; Ordered symbols, binary by default.

    Returns:
        The symbolic database of n_granules * factor_m fine granules.

    Raises:
        StpmPlantError: A plant does not fit the database or the declared
            thresholds cannot separate its seasons.
    """
    rng = np.random.default_rng(seed)
    names = series_names(n_series)
    lookup = {symbol: index for index, symbol in enumerate(alphabet)}
    spec = GranularitySpec.of(factor_m)
    length = n_granules * factor_m
    symbols = rng.integers(0, len(alphabet), size=(n_series, length))
    row_of = {name: index for index, name in enumerate(names)}

    max_period = max((plant.intra_period for plant in plants), default=0)
    owner: Dict[str, int] = {}
    for number, plant in enumerate(plants, start=1):
        for series in plant.series:
            if series not in row_of:
                raise StpmPlantError(f"Plant {number}: unknown series {series!r}")
            if series in owner:
                raise StpmPlantError(
                    f"Plant {number}: series {series} already used by plant"
                    f" {owner[series]}"
                )
            owner[series] = number
        if plant.season_count > 1 and plant.inter_distance <= max_period:
            raise StpmPlantError(
                f"Plant {number}: inter_distance {plant.inter_distance} does not"
                f" separate seasons with a max_period of {max_period}"
            )
        granules = plant.granules()
        if granules[-1] > n_granules:
            raise StpmPlantError(
                f"Plant {number}: needs {granules[-1]} granules, got {n_granules}"
            )

        rows = _plant_rows(plant, factor_m, lookup)
        for series, row in rows.items():
            values = symbols[row_of[series]]
            values[:] = 0
            for granule in granules:
                first, last = spec.fine_span(granule)
                values[first - 1 : last] = row
            if plant.noise_rate > 0.0:
                flips = np.flatnonzero(rng.random(length) < plant.noise_rate)
                shifts = rng.integers(1, len(alphabet), size=flips.size)
                values[flips] = (values[flips] + shifts) % len(alphabet)
        _LOGGER.debug(
            "Plant %d: %s in %d granules", number, plant.series, len(granules)
        )

    return SymbolicDatabase(
        [
            SymbolicSeries(name, tuple(row.tolist()), tuple(alphabet))
            for name, row in zip(names, symbols)
        ]
    )


def emit_raw(
    db: SymbolicDatabase,
    mapping: SymbolMapping,
    seed: int,
) -> Dict[str, np.ndarray]:
    """Draw raw values that a mapping encodes back into the symbols of a database.

    Args:
        db: The symbolic database.
        mapping: Threshold mapping, with the alphabet of every series.
        seed: Seed of the random generator.

    Returns:
        Series id to its raw values, one per fine granule.

    Raises:
        StpmPlantError: A series alphabet differs from the mapping's.
    """
    rng = np.random.default_rng(seed)
    bands = [mapping.band(index) for index in range(len(mapping.alphabet))]
    lows = np.array([low if np.isfinite(low) else high - 1.0 for low, high in bands])
    highs = np.array([high if np.isfinite(high) else low + 1.0 for low, high in bands])
    raw: Dict[str, np.ndarray] = {}
    for series in db:
        if series.alphabet != mapping.alphabet:
            raise StpmPlantError(
                f"Series {series.series_id} alphabet {list(series.alphabet)} differs"
                f" from the mapping alphabet {list(mapping.alphabet)}"
            )
        indices = np.asarray(series.symbols, dtype=np.int64)
        # uniform in [low, high), kept off the upper cut point
        fraction = rng.uniform(0.05, 0.95, size=indices.size)
        raw[series.series_id] = lows[indices] + fraction * (
            highs[indices] - lows[indices]
        )
    return raw


def recall(
    found: Iterable[TemporalPattern], planted: Iterable[TemporalPattern]
) -> float:
    """Return the share of planted patterns among the found ones.

    Args:
        found: Mined pattern keys.
        planted: Planted pattern keys.

    Returns:
        |found ∩ planted| / |planted|, 1.0 when nothing was planted.

    Example:
        >>> recall([], [])
        1.0
    """
    planted_keys = set(planted)
    if not planted_keys:
        return 1.0
    return len(planted_keys & set(found)) / len(planted_keys)
