# -*- coding: utf-8 -*-
"""Mining result model."""
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from typing import Any
from typing import Dict
from typing import Iterable
from typing import Iterator
from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Set
from typing import Tuple
from typing import TypedDict

from stpm.const import SCHEMA_VERSION
from .pattern import PatternKeyData
from .pattern import TemporalPattern
from .season import ResolvedSeasonConfig
from .season import SeasonAnalysis


class PatternData(PatternKeyData):
    """Describing the JSON form of a mined pattern."""

    support: List[int]
    seasons: List[List[int]]
    distances: List[int]
    max_season: str


class ThresholdsData(TypedDict):
    """Describing the JSON form of the resolved thresholds."""

    max_period: int
    min_density: int
    dist_interval: List[int]
    min_season: int
    n_granules: int


class ResultData(TypedDict):
    """Describing the data structure of the patterns JSON document."""

    schema_version: int
    mode: str
    config: Dict[str, Any]
    thresholds: ThresholdsData
    patterns: List[PatternData]


class MinedPattern(NamedTuple):
    """A frequent seasonal pattern with its support and seasons."""

    pattern: TemporalPattern
    support: Tuple[int, ...]
    analysis: SeasonAnalysis
    max_season: Fraction

    def to_data(self) -> PatternData:
        """Return the JSON form of the mined pattern."""
        key = self.pattern.to_data()
        return {
            "events": key["events"],
            "triples": key["triples"],
            "support": list(self.support),
            "seasons": [list(season) for season in self.analysis.seasons],
            "distances": list(self.analysis.distances),
            "max_season": str(self.max_season),
        }


@dataclass
class LevelStats:
    """Candidate counts of one mining level.

    Attributes:
        level: Pattern size k.
        generated: Events (k = 1) or event groups formed at this level.
        pruned: Those failing the candidate gate.
        patterns: Candidate patterns stored at this level.
        frequent: Frequent seasonal patterns found at this level.
        seconds: Wall time of the level.
    """

    level: int
    generated: int = 0
    pruned: int = 0
    patterns: int = 0
    frequent: int = 0
    seconds: float = 0.0

    @property
    def candidates(self) -> int:
        """Return the groups surviving the gate."""
        return self.generated - self.pruned

    def to_data(self) -> Dict[str, Any]:
        """Return the manifest form of the counts."""
        return {
            "level": self.level,
            "generated": self.generated,
            "pruned": self.pruned,
            "candidates": self.candidates,
            "patterns": self.patterns,
            "frequent": self.frequent,
            "seconds": round(self.seconds, 6),
        }


@dataclass
class MiningResult:
    """Frequent seasonal patterns of one run, in canonical order.

    Attributes:
        mode: The miner that produced the result (exact, approx or oracle).
        thresholds: Resolved seasonality thresholds.
        n_granules: Number of coarse granules mined.
        patterns: The frequent seasonal patterns.
        levels: Per level candidate counts.
        config: Optional echo of the run configuration.
    """

    mode: str
    thresholds: ResolvedSeasonConfig
    n_granules: int
    patterns: List[MinedPattern] = field(default_factory=list)
    levels: List[LevelStats] = field(default_factory=list)
    config: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Keep the patterns in canonical order."""
        self.patterns.sort(key=lambda mined: mined.pattern.sort_key())

    def __iter__(self) -> Iterator[MinedPattern]:
        """Iterate over the mined patterns."""
        return iter(self.patterns)

    def __len__(self) -> int:
        """Return the number of mined patterns."""
        return len(self.patterns)

    def __contains__(self, pattern: object) -> bool:
        """Return True if a pattern key is among the mined patterns."""
        return pattern in self.keys()

    def keys(self) -> Set[TemporalPattern]:
        """Return the mined pattern keys."""
        return {mined.pattern for mined in self.patterns}

    def get(self, pattern: TemporalPattern) -> Optional[MinedPattern]:
        """Return the mined entry of a pattern key, if mined."""
        matches = (mined for mined in self.patterns if mined.pattern == pattern)
        return next(matches, None)

    def of_size(self, size: int) -> List[MinedPattern]:
        """Return the mined patterns with a given number of events."""
        return [mined for mined in self.patterns if mined.pattern.size == size]

    def level(self, size: int) -> Optional[LevelStats]:
        """Return the counts of a level, if it was mined."""
        return next((stats for stats in self.levels if stats.level == size), None)

    def to_json_data(self) -> ResultData:
        """Return the patterns JSON document (no timing data)."""
        return {
            "schema_version": SCHEMA_VERSION,
            "mode": self.mode,
            "config": self.config,
            "thresholds": {
                "max_period": self.thresholds.max_period,
                "min_density": self.thresholds.min_density,
                "dist_interval": [self.thresholds.dist_min, self.thresholds.dist_max],
                "min_season": self.thresholds.min_season,
                "n_granules": self.n_granules,
            },
            "patterns": [mined.to_data() for mined in self.patterns],
        }

    @classmethod
    def from_json_data(cls, data: ResultData) -> "MiningResult":
        """Build a result back from its patterns JSON document.

        Args:
            data: A document produced by to_json_data.

        Returns:
            The mining result, without level counts.
        """
        thresholds = data["thresholds"]
        resolved = ResolvedSeasonConfig(
            thresholds["max_period"],
            thresholds["min_density"],
            thresholds["dist_interval"][0],
            thresholds["dist_interval"][1],
            thresholds["min_season"],
        )
        patterns = []
        for item in data["patterns"]:
            # near sets that failed density are not part of the document
            seasons = tuple(tuple(season) for season in item["seasons"])
            analysis = SeasonAnalysis(
                near_sets=seasons,
                seasons=seasons,
                distances=tuple(item["distances"]),
                is_frequent_seasonal=True,
            )
            patterns.append(
                MinedPattern(
                    TemporalPattern.from_data(item),
                    tuple(item["support"]),
                    analysis,
                    Fraction(item["max_season"]),
                )
            )
        return cls(
            mode=data["mode"],
            thresholds=resolved,
            n_granules=thresholds["n_granules"],
            patterns=patterns,
            config=dict(data["config"]),
        )


def accuracy(
    approx: Iterable[TemporalPattern], exact: Iterable[TemporalPattern]
) -> float:
    """Return the share of exact patterns also found by the approximation.

    Args:
        approx: Pattern keys found by the approximate miner.
        exact: Pattern keys found by the exact miner.

    Returns:
        |approx ∩ exact| / |exact|, 1.0 when the exact result is empty.
    """
    exact_keys = set(exact)
    if not exact_keys:
        return 1.0
    return len(exact_keys & set(approx)) / len(exact_keys)
