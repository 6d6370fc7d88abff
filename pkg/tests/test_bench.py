# coding: utf-8
"""Tests for stpm module. Benchmark harness."""
import time
from functools import partial
from typing import List

import numpy as np
import pytest

from .const import WORKED_FACTOR_M
from stpm.approx import build_correlation_graph
from stpm.approx import mine_approx
from stpm.bench import COLUMNS
from stpm.bench import benchmark
from stpm.bench import measure
from stpm.bench import sweep
from stpm.exceptions import StpmConfigError
from stpm.miner import mine
from stpm.model.config import MinerConfig
from stpm.model.database import SequenceDatabase
from stpm.model.granularity import GranularitySpec
from stpm.model.relation import RelationConfig
from stpm.model.season import SeasonConfig
from stpm.model.symbols import SymbolicDatabase
from stpm.symbolic import build_sequence_db
from stpm.synth import random_database


def test_measure(worked_db: SequenceDatabase, worked_config: MinerConfig) -> None:
    """Test one timed run returns the miner result."""
    result, seconds, peak = measure(partial(mine, worked_db, worked_config))

    assert result.keys() == mine(worked_db, worked_config).keys()
    assert seconds >= 0
    assert peak >= 0


def test_benchmark(
    worked_symbolic: SymbolicDatabase,
    worked_db: SequenceDatabase,
    worked_config: MinerConfig,
) -> None:
    """Test one row per mode with the exact run as reference."""
    table = benchmark(worked_db, worked_symbolic, worked_config, repeat=2)

    assert list(table.columns) == COLUMNS
    assert list(table["mode"]) == ["exact", "approx"]
    exact, approx = table.iloc[0], table.iloc[1]
    assert exact["accuracy"] == 1.0
    assert exact["speedup"] == pytest.approx(1.0)
    assert exact["pairs_pruned_share"] == 0.0
    assert exact["patterns"] == len(mine(worked_db, worked_config))
    assert exact["seconds_min"] <= exact["seconds"]
    assert 0.0 <= approx["accuracy"] <= 1.0
    assert approx["patterns"] <= exact["patterns"]
    assert 0.0 <= approx["pairs_pruned_share"] <= 1.0


def test_benchmark_variants(
    worked_symbolic: SymbolicDatabase,
    worked_db: SequenceDatabase,
    worked_config: MinerConfig,
) -> None:
    """Test the pruning variants agree and are timed against the unpruned run."""
    table = benchmark(
        worked_db,
        worked_symbolic,
        worked_config,
        modes=["exact"],
        repeat=1,
        variants=True,
    )

    assert list(table["variant"]) == ["all", "none", "apriori", "transitivity"]
    assert set(table["mode"]) == {"exact"}
    assert set(table["accuracy"]) == {1.0}
    assert len(set(table["patterns"])) == 1
    unpruned = table[table["variant"] == "none"].iloc[0]
    pruned = table[table["variant"] == "all"].iloc[0]
    assert unpruned["speedup"] == pytest.approx(1.0)
    assert pruned["generated"] <= unpruned["generated"]


def test_benchmark_approx_only(
    worked_symbolic: SymbolicDatabase,
    worked_db: SequenceDatabase,
    worked_config: MinerConfig,
) -> None:
    """Test the exact reference run is not reported unless asked for."""
    table = benchmark(
        worked_db, worked_symbolic, worked_config, modes=["approx"], repeat=1
    )

    assert list(table["mode"]) == ["approx"]


@pytest.mark.parametrize(
    "modes, repeat", [(["exact"], 0), (["exact", "fast"], 1), (["slow"], 1)]
)
def test_benchmark_invalid(
    worked_symbolic: SymbolicDatabase,
    worked_db: SequenceDatabase,
    worked_config: MinerConfig,
    modes: List[str],
    repeat: int,
) -> None:
    """Test unknown modes and repeat counts below 1."""
    with pytest.raises(StpmConfigError):
        benchmark(worked_db, worked_symbolic, worked_config, modes=modes, repeat=repeat)


def test_sweep_thresholds(
    worked_symbolic: SymbolicDatabase,
    worked_db: SequenceDatabase,
    worked_config: MinerConfig,
) -> None:
    """Test one row per minSeason setting, fewer patterns as it grows."""
    table = sweep(
        "min-season",
        [1, 2, 3],
        worked_symbolic,
        GranularitySpec.of(WORKED_FACTOR_M),
        worked_config,
        modes=["exact"],
    )

    assert list(table.columns) == ["axis", "value", *COLUMNS]
    assert list(table["axis"]) == ["min-season"] * 3
    assert list(table["value"]) == ["1", "2", "3"]
    patterns = list(table["patterns"])
    assert patterns == sorted(patterns, reverse=True)
    assert patterns[1] == len(mine(worked_db, worked_config))


def test_sweep_percent_threshold(
    worked_symbolic: SymbolicDatabase, worked_config: MinerConfig
) -> None:
    """Test threshold settings in percent of the granules."""
    table = sweep(
        "max-period",
        ["5%", "2"],
        worked_symbolic,
        GranularitySpec.of(WORKED_FACTOR_M),
        worked_config,
        modes=["exact"],
    )

    assert list(table["value"]) == ["5%", "2"]
    assert len(table) == 2


@pytest.mark.parametrize("axis", ["granules", "series"])
def test_sweep_sizes(
    worked_symbolic: SymbolicDatabase, worked_config: MinerConfig, axis: str
) -> None:
    """Test the size axes mine generated databases, exact then approx per size."""
    table = sweep(
        axis,
        [8, 12],
        worked_symbolic,
        GranularitySpec.of(WORKED_FACTOR_M),
        worked_config,
        seed=4,
    )

    assert list(table["value"]) == ["8", "8", "12", "12"]
    assert list(table["mode"]) == ["exact", "approx"] * 2
    assert set(table[table["mode"] == "exact"]["accuracy"]) == {1.0}


@pytest.mark.parametrize(
    "axis, values",
    [
        ("threads", ["1"]),
        ("min-season", []),
        ("min-season", ["x"]),
        ("min-density", ["0"]),
        ("granules", ["0"]),
        ("series", ["2.5"]),
    ],
)
def test_sweep_invalid(
    worked_symbolic: SymbolicDatabase,
    worked_config: MinerConfig,
    axis: str,
    values: List[str],
) -> None:
    """Test unknown axes and invalid settings."""
    with pytest.raises(StpmConfigError):
        sweep(
            axis,
            values,
            worked_symbolic,
            GranularitySpec.of(WORKED_FACTOR_M),
            worked_config,
        )


@pytest.mark.slow
def test_benchmark_scaling() -> None:
    """Test 100 series of 10 000 granules are mined within a minute."""
    db_syb = random_database(100, 30_000, np.random.default_rng(12))
    db = build_sequence_db(db_syb, GranularitySpec.of(3))
    cfg = MinerConfig(
        season=SeasonConfig.of("1%", "1%", (5, 100), 3),
        relation=RelationConfig.of(),
        max_pattern_size=2,
    )

    started = time.perf_counter()
    exact = mine(db, cfg)
    exact_seconds = time.perf_counter() - started

    started = time.perf_counter()
    graph = build_correlation_graph(db_syb, cfg.season.resolve(len(db)), len(db))
    approx = mine_approx(db, db_syb, cfg, graph=graph)
    approx_seconds = time.perf_counter() - started

    assert len(db) == 10_000
    assert exact_seconds < 60
    assert approx.keys() <= exact.keys()
    assert approx_seconds <= 1.1 * exact_seconds
    if graph.pruned_share() >= 0.2:
        assert approx_seconds < exact_seconds
