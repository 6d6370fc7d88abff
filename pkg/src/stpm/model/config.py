# -*- coding: utf-8 -*-
"""Miner and run configuration model."""
import copy
from dataclasses import dataclass
from dataclasses import replace
from pathlib import Path
from typing import Any
from typing import Dict
from typing import Optional
from typing import TypedDict

from pytz import timezone
from pytz.exceptions import UnknownTimeZoneError

from stpm.const import DEFAULT_EPSILON
from stpm.const import DEFAULT_MAX_PATTERN_SIZE
from stpm.const import DEFAULT_MIN_OVERLAP
from stpm.const import DEFAULT_THREADS
from stpm.const import DEFAULT_TIMEZONE
from stpm.const import MODE_EXACT
from stpm.const import MODES
from stpm.exceptions import StpmConfigError
from .granularity import GranularitySpec
from .relation import RelationConfig
from .relation import RelationConfigData
from .season import SeasonConfig
from .season import SeasonConfigData


@dataclass(frozen=True)
class MinerConfig:
    """Settings shared by the exact miner, the approximate miner and the oracle.

    Attributes:
        season: Seasonality thresholds.
        relation: Relation tolerance settings.
        max_pattern_size: Largest pattern size k_max to mine.
        apriori: Prune on the maxSeason candidate gate.
        transitivity: Prune appended events with the transitivity filter.
        threads: Bound of the per-level parallel fan-out.
    """

    season: SeasonConfig
    relation: RelationConfig
    max_pattern_size: int = DEFAULT_MAX_PATTERN_SIZE
    apriori: bool = True
    transitivity: bool = True
    threads: int = DEFAULT_THREADS

    def __post_init__(self) -> None:
        """Validate the numeric settings."""
        if self.max_pattern_size < 1:
            raise StpmConfigError(
                f"max_pattern_size must be >= 1, got {self.max_pattern_size}"
            )
        if self.threads < 1:
            raise StpmConfigError(f"threads must be >= 1, got {self.threads}")

    def with_pruning(self, apriori: bool, transitivity: bool) -> "MinerConfig":
        """Return a copy with other pruning flags."""
        return replace(self, apriori=apriori, transitivity=transitivity)


class PruningData(TypedDict):
    """Describing the data structure of the pruning flags."""

    apriori: bool
    transitivity: bool


class RunConfigData(TypedDict, total=False):
    """Describing the data structure of the run configuration file."""

    input: str
    factor_m: int
    fine_unit_label: str
    mode: str
    max_pattern_size: int
    season: SeasonConfigData
    relation: RelationConfigData
    pruning: PruningData
    symbols: Dict[str, Dict[str, Any]]
    symbolic: bool
    output: Optional[str]
    manifest: Optional[str]
    graph: Optional[str]
    threads: int
    seed: int
    timezone: str


DEFAULT_RUN_CONFIG: RunConfigData = {
    "factor_m": 1,
    "fine_unit_label": "granule",
    "mode": MODE_EXACT,
    "max_pattern_size": DEFAULT_MAX_PATTERN_SIZE,
    "relation": {"epsilon": DEFAULT_EPSILON, "min_overlap": DEFAULT_MIN_OVERLAP},
    "pruning": {"apriori": True, "transitivity": True},
    "symbols": {"default": {"alphabet": ["0", "1"], "thresholds": [0.5]}},
    "symbolic": False,
    "output": None,
    "manifest": None,
    "graph": None,
    "threads": DEFAULT_THREADS,
    "seed": 0,
    "timezone": DEFAULT_TIMEZONE,
}


class RunConfig:
    """Class describing one mining run.

    Unset fields take the values of DEFAULT_RUN_CONFIG. The input path and the season
    thresholds are required.
    """

    def __init__(self, raw_data: RunConfigData) -> None:
        """Initialize a RunConfig object.

        Args:
            raw_data: A dictionary describing the run, usually the parsed YAML
                configuration file merged with the command-line flags. The structure
                is described by the RunConfigData class.

        Raises:
            StpmConfigError: A field is missing or invalid.
        """
        merged: Dict[str, Any] = copy.deepcopy(dict(DEFAULT_RUN_CONFIG))
        for key, value in raw_data.items():
            if isinstance(value, dict) and isinstance(merged.get(key), dict):
                merged[key] = {**merged[key], **value}
            elif value is not None or key not in merged:
                merged[key] = value
        for required in ("input", "season"):
            if merged.get(required) is None:
                raise StpmConfigError(f"Missing configuration field {required!r}")
        if merged["mode"] not in MODES:
            raise StpmConfigError(
                f"mode must be one of {', '.join(MODES)}, got {merged['mode']!r}"
            )
        try:
            timezone(merged["timezone"])
        except UnknownTimeZoneError as err:
            raise StpmConfigError(f"Unknown timezone {merged['timezone']!r}") from err
        self.raw_data: RunConfigData = merged  # type: ignore[assignment]

        # fail early on invalid member settings
        try:
            self.granularity = GranularitySpec(
                {
                    "fine_unit_label": str(merged["fine_unit_label"]),
                    "factor_m": int(merged["factor_m"]),
                }
            )
            self.miner = MinerConfig(
                season=SeasonConfig(merged["season"]),
                relation=RelationConfig(merged["relation"]),
                max_pattern_size=int(merged["max_pattern_size"]),
                apriori=bool(merged["pruning"]["apriori"]),
                transitivity=bool(merged["pruning"]["transitivity"]),
                threads=int(merged["threads"]),
            )
        except (KeyError, TypeError, ValueError) as err:
            raise StpmConfigError(f"Invalid configuration: {err!r}") from err

    @property
    def input(self) -> Path:
        """Return the input CSV path."""
        return Path(self.raw_data["input"])

    @property
    def mode(self) -> str:
        """Return the run mode, exact or approx."""
        return self.raw_data["mode"]

    @property
    def symbols(self) -> Dict[str, Dict[str, Any]]:
        """Return the per-series symbolisation settings."""
        return self.raw_data["symbols"]

    @property
    def symbolic(self) -> bool:
        """Return True when the input cells are already symbols."""
        return bool(self.raw_data["symbolic"])

    @property
    def output(self) -> Optional[Path]:
        """Return the patterns JSON path."""
        return _optional_path(self.raw_data["output"])

    @property
    def manifest(self) -> Optional[Path]:
        """Return the run manifest path."""
        return _optional_path(self.raw_data["manifest"])

    @property
    def graph(self) -> Optional[Path]:
        """Return the correlation graph dump path."""
        return _optional_path(self.raw_data["graph"])

    @property
    def seed(self) -> int:
        """Return the seed recorded with the run."""
        return int(self.raw_data["seed"])

    @property
    def timezone(self) -> str:
        """Return the timezone used for timestamps."""
        return self.raw_data["timezone"]

    def validate_paths(self) -> None:
        """Check that the referenced input file exists.

        Raises:
            StpmConfigError: The input file does not exist.
        """
        if not self.input.is_file():
            raise StpmConfigError(f"Input file {str(self.input)!r} does not exist")

    def echo(self) -> Dict[str, Any]:
        """Return the configuration as emitted in the output documents."""
        return {
            "input": str(self.input),
            "factor_m": self.granularity.factor_m,
            "mode": self.mode,
            "max_pattern_size": self.miner.max_pattern_size,
            "season": dict(self.miner.season.raw_data),
            "relation": dict(self.miner.relation.raw_data),
            "pruning": {
                "apriori": self.miner.apriori,
                "transitivity": self.miner.transitivity,
            },
        }


def _optional_path(value: Optional[str]) -> Optional[Path]:
    return Path(value) if value else None
