# -*- coding: utf-8 -*-
"""Brute-force reference miner and the differential runner comparing it to E-STPM.

oracle_mine applies the definitions literally: every ordered tuple of distinct events,
every assignment of relations to its pairs, support by scanning the instance
assignments of every granule. It relies on the core model, the relation predicates
and the season analysis only.
"""
import itertools
import json
import logging
from dataclasses import dataclass
from dataclasses import field
from typing import Dict
from typing import Iterable
from typing import List
from typing import Optional
from typing import Set
from typing import Tuple

import numpy as np

from .const import ORACLE_MAX_EVENTS
from .const import ORACLE_MAX_PATTERN_SIZE
from .const import PRUNING_VARIANTS
from .exceptions import StpmConfigError
from .exceptions import StpmLimitError
from .miner import mine
from .model.config import MinerConfig
from .model.database import Event
from .model.database import SequenceDatabase
from .model.granularity import GranularitySpec
from .model.pattern import TemporalPattern
from .model.relation import RelationConfig
from .model.relation import RelationKind
from .model.relation import Triple
from .model.result import LevelStats
from .model.result import MinedPattern
from .model.result import MiningResult
from .model.season import SeasonConfig
from .relations import classify
from .seasonality import analyze
from .seasonality import max_season
from .symbolic import build_sequence_db
from .synth import random_database

_LOGGER = logging.getLogger(__name__)

MODE_ORACLE = "oracle"

# (events, relations of the pairs (0, 1), (0, 2), ..., (k-2, k-1))
AssignmentKey = Tuple[Tuple[Event, ...], Tuple[RelationKind, ...]]


@dataclass(frozen=True)
class OracleLimits:
    """Size limits checked before any enumeration.

    Attributes:
        max_events_total: Largest number of distinct events accepted.
        max_pattern_size: Largest pattern size accepted, at most 3.
    """

    max_events_total: int = ORACLE_MAX_EVENTS
    max_pattern_size: int = ORACLE_MAX_PATTERN_SIZE

    def __post_init__(self) -> None:
        """Validate the limits."""
        if self.max_events_total < 1:
            raise StpmConfigError(
                f"max_events_total must be >= 1, got {self.max_events_total}"
            )
        if not 1 <= self.max_pattern_size <= ORACLE_MAX_PATTERN_SIZE:
            raise StpmConfigError(
                f"max_pattern_size must lie in [1, {ORACLE_MAX_PATTERN_SIZE}],"
                f" got {self.max_pattern_size}"
            )


def _pairs(k: int) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(k) for j in range(i + 1, k)]


def _assignment_index(
    db: SequenceDatabase, cfg: MinerConfig, max_size: int
) -> Dict[AssignmentKey, Set[int]]:
    """Record, per granule, the relations realized by every instance tuple."""
    index: Dict[AssignmentKey, Set[int]] = {}
    for granule in db.positions():
        instances = db.granule(granule)
        for k in range(2, max_size + 1):
            if len(instances) < k:
                break
            for chosen in itertools.combinations(instances, k):
                events = tuple(instance.event for instance in chosen)
                if len(set(events)) < k:
                    continue
                relations = []
                for i, j in _pairs(k):
                    relation = classify(chosen[i], chosen[j], cfg.relation)
                    if relation is None:
                        break
                    relations.append(relation)
                else:
                    index.setdefault((events, tuple(relations)), set()).add(granule)
    return index


def oracle_mine(
    db: SequenceDatabase,
    cfg: MinerConfig,
    limits: Optional[OracleLimits] = None,
) -> MiningResult:
    """Mine every frequent seasonal pattern by exhaustive enumeration.

    Args:
        db: The sequence database.
        cfg: Miner settings. The pruning flags and threads are ignored.
        limits: Optional; Size limits, the defaults when omitted.

    Returns:
        The frequent seasonal patterns in canonical order.

    Raises:
        StpmLimitError: The database or the pattern size exceeds the limits.
    """
    limits = limits or OracleLimits()
    events = db.events()
    if len(events) > limits.max_events_total:
        _LOGGER.warning(
            "Oracle refused: %d distinct events > %d",
            len(events),
            limits.max_events_total,
        )
        raise StpmLimitError(
            f"Database has {len(events)} distinct events,"
            f" the oracle accepts at most {limits.max_events_total}"
        )
    if cfg.max_pattern_size > limits.max_pattern_size:
        _LOGGER.warning(
            "Oracle refused: pattern size %d > %d",
            cfg.max_pattern_size,
            limits.max_pattern_size,
        )
        raise StpmLimitError(
            f"Pattern size {cfg.max_pattern_size} exceeds the oracle limit"
            f" {limits.max_pattern_size}"
        )

    thresholds = cfg.season.resolve(len(db))
    result = MiningResult(mode=MODE_ORACLE, thresholds=thresholds, n_granules=len(db))

    singles: Dict[Event, Set[int]] = {}
    for granule in db.positions():
        for instance in db.granule(granule):
            singles.setdefault(instance.event, set()).add(granule)
    index = _assignment_index(db, cfg, cfg.max_pattern_size)

    for k in range(1, cfg.max_pattern_size + 1):
        stats = LevelStats(level=k)
        pairs = _pairs(k)
        for ordered in itertools.permutations(events, k):
            for relations in itertools.product(list(RelationKind), repeat=len(pairs)):
                stats.generated += 1
                if k == 1:
                    granules = singles.get(ordered[0], set())
                else:
                    granules = index.get((ordered, relations), set())
                if not granules:
                    continue
                stats.patterns += 1
                support = tuple(sorted(granules))
                analysis = analyze(support, thresholds)
                if not analysis.is_frequent_seasonal:
                    continue
                stats.frequent += 1
                pattern = TemporalPattern(
                    ordered,
                    tuple(
                        Triple(relation, i, j)
                        for relation, (i, j) in zip(relations, pairs)
                    ),
                )
                result.patterns.append(
                    MinedPattern(
                        pattern,
                        support,
                        analysis,
                        max_season(support, thresholds.min_density),
                    )
                )
        result.levels.append(stats)

    result.patterns.sort(key=lambda mined: mined.pattern.sort_key())
    return result


#
# Differential runs
#
@dataclass
class DifferentialReport:
    """Outcome of a differential run.

    Attributes:
        seeds: The seeds run.
        mismatches: Seed and description of every disagreement.
        generated: Per pruning variant, the generated group count summed over seeds.
    """

    seeds: List[int] = field(default_factory=list)
    mismatches: List[Tuple[int, str]] = field(default_factory=list)
    generated: Dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        """Return True when every seed agreed."""
        return not self.mismatches


def canonical_json(result: MiningResult) -> str:
    """Return the canonical JSON text of the mined patterns."""
    return json.dumps(
        [mined.to_data() for mined in result.patterns], sort_keys=True, indent=2
    )


def random_config(
    rng: np.random.Generator, max_pattern_size: int = ORACLE_MAX_PATTERN_SIZE
) -> MinerConfig:
    """Draw small seasonality thresholds for a differential case."""
    dist_min = int(rng.integers(1, 4))
    return MinerConfig(
        season=SeasonConfig.of(
            max_period=int(rng.integers(1, 4)),
            min_density=int(rng.integers(1, 4)),
            dist_interval=(dist_min, dist_min + int(rng.integers(0, 12))),
            min_season=int(rng.integers(1, 3)),
        ),
        relation=RelationConfig.of(),
        max_pattern_size=max_pattern_size,
    )


def differential(
    seeds: Iterable[int],
    *,
    max_series: int = 6,
    max_granules: int = 30,
    factor_m: int = 3,
    max_pattern_size: int = ORACLE_MAX_PATTERN_SIZE,
) -> DifferentialReport:
    """Compare the exact miner to the oracle on random binary databases.

    Every pruning variant of the exact miner must give the oracle's output, and the
    fully pruned variant must not generate more groups than the unpruned one.

    Args:
        seeds: Seeds of the random databases and thresholds.
        max_series: Optional; Largest number of series drawn.
        max_granules: Optional; Largest number of coarse granules drawn.
        factor_m: Optional; Fine granules per coarse granule.
        max_pattern_size: Optional; Largest pattern size mined.

    Returns:
        The differential report.
    """
    report = DifferentialReport()
    spec = GranularitySpec.of(factor_m)
    for seed in seeds:
        rng = np.random.default_rng(seed)
        n_series = int(rng.integers(2, max_series + 1))
        n_granules = int(rng.integers(5, max_granules + 1))
        db_syb = random_database(n_series, n_granules * factor_m, rng)
        db = build_sequence_db(db_syb, spec)
        cfg = random_config(rng, max_pattern_size)
        report.seeds.append(seed)

        expected = canonical_json(oracle_mine(db, cfg))
        counts: Dict[str, int] = {}
        for name, (apriori, transitivity) in PRUNING_VARIANTS.items():
            mined = mine(db, cfg.with_pruning(apriori, transitivity))
            counts[name] = sum(stats.generated for stats in mined.levels[1:])
            report.generated[name] = report.generated.get(name, 0) + counts[name]
            if canonical_json(mined) != expected:
                report.mismatches.append((seed, f"variant {name} differs"))
        if counts["all"] > counts["none"]:
            report.mismatches.append(
                (seed, f"pruned run generated {counts['all']} > {counts['none']}")
            )
        _LOGGER.debug("Seed %d: %d series, %d granules", seed, n_series, n_granules)

    _LOGGER.info(
        "Differential run: %d seeds, %d mismatches",
        len(report.seeds),
        len(report.mismatches),
    )
    return report
