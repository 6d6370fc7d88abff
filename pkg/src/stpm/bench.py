# -*- coding: utf-8 -*-
"""Benchmark harness comparing the exact and approximate miners."""
import logging
import time
import tracemalloc
from dataclasses import replace
from functools import partial
from typing import Any
from typing import Callable
from typing import Dict
from typing import List
from typing import Sequence
from typing import Tuple
from typing import Union

import pandas as pd

from .approx import build_correlation_graph
from .approx import mine_approx
from .const import MODE_APPROX
from .const import MODE_EXACT
from .const import PRUNING_VARIANTS
from .const import SWEEP_AXES
from .const import SWEEP_THRESHOLDS
from .exceptions import StpmConfigError
from .miner import mine
from .model.config import MinerConfig
from .model.database import SequenceDatabase
from .model.granularity import GranularitySpec
from .model.result import MiningResult
from .model.result import accuracy
from .model.season import SeasonConfig
from .model.symbols import SymbolicDatabase
from .symbolic import build_sequence_db
from .synth import generate

_LOGGER = logging.getLogger(__name__)

COLUMNS = [
    "mode",
    "variant",
    "seconds",
    "seconds_min",
    "peak_kib",
    "patterns",
    "generated",
    "accuracy",
    "speedup",
    "pairs_pruned_share",
]


def measure(func: Callable[[], MiningResult]) -> Tuple[MiningResult, float, int]:
    """Run a miner once under tracemalloc.

    Args:
        func: The mining call.

    Returns:
        The result, its wall time in seconds and the allocation peak in KiB.
    """
    tracing = tracemalloc.is_tracing()
    if not tracing:
        tracemalloc.start()
    tracemalloc.reset_peak()
    started = time.perf_counter()
    try:
        result = func()
        seconds = time.perf_counter() - started
        _, peak = tracemalloc.get_traced_memory()
    finally:
        if not tracing:
            tracemalloc.stop()
    return result, seconds, peak // 1024


def _repeat(
    func: Callable[[], MiningResult], repeat: int
) -> Tuple[MiningResult, List[float], int]:
    result, seconds, peak = measure(func)
    timings = [seconds]
    for _ in range(repeat - 1):
        result, seconds, run_peak = measure(func)
        timings.append(seconds)
        peak = max(peak, run_peak)
    return result, timings, peak


def benchmark(
    db: SequenceDatabase,
    db_syb: SymbolicDatabase,
    cfg: MinerConfig,
    *,
    modes: Sequence[str] = (MODE_EXACT, MODE_APPROX),
    repeat: int = 3,
    variants: bool = False,
) -> pd.DataFrame:
    """Time the miners on one input and compare their outputs.

    Accuracy is the share of the exact patterns the run recovers. With variants, the
    exact miner runs under every pruning configuration and speedups are relative to
    the unpruned one; otherwise speedups are relative to the exact run.

    Args:
        db: The sequence database.
        db_syb: The symbolic database db was built from.
        cfg: Miner settings.
        modes: Optional; Modes to run, exact and/or approx.
        repeat: Optional; Runs per configuration; the mean and minimum are reported.
        variants: Optional; Also run the four pruning configurations.

    Returns:
        One row per run configuration, with the COLUMNS columns.

    Raises:
        StpmConfigError: A mode is unknown or repeat is below 1.
    """
    if repeat < 1:
        raise StpmConfigError(f"repeat must be >= 1, got {repeat}")
    unknown = set(modes) - {MODE_EXACT, MODE_APPROX}
    if unknown:
        raise StpmConfigError(f"Unknown benchmark modes {sorted(unknown)}")

    runs: Dict[Tuple[str, str], Tuple[MiningResult, List[float], int]] = {}
    # the exact run is the accuracy reference even when not reported
    runs[(MODE_EXACT, "all")] = _repeat(partial(mine, db, cfg), repeat)
    if variants:
        for name, (apriori, transitivity) in PRUNING_VARIANTS.items():
            if name == "all":
                continue
            runs[(MODE_EXACT, name)] = _repeat(
                partial(mine, db, cfg.with_pruning(apriori, transitivity)), repeat
            )

    pairs_pruned = float("nan")
    if MODE_APPROX in modes:
        graph = build_correlation_graph(
            db_syb, cfg.season.resolve(len(db)), len(db), threads=cfg.threads
        )
        pairs_pruned = graph.pruned_share()
        runs[(MODE_APPROX, "all")] = _repeat(
            partial(mine_approx, db, db_syb, cfg), repeat
        )

    exact_keys = runs[(MODE_EXACT, "all")][0].keys()
    reference = (MODE_EXACT, "none") if variants else (MODE_EXACT, "all")
    reference_seconds = _mean(runs[reference][1])

    rows = []
    for (mode, variant), (result, timings, peak) in runs.items():
        if mode == MODE_EXACT and variant == "all" and MODE_EXACT not in modes:
            continue
        seconds = _mean(timings)
        rows.append(
            {
                "mode": mode,
                "variant": variant,
                "seconds": seconds,
                "seconds_min": min(timings),
                "peak_kib": peak,
                "patterns": len(result),
                "generated": sum(stats.generated for stats in result.levels[1:]),
                "accuracy": accuracy(result.keys(), exact_keys),
                "speedup": reference_seconds / seconds if seconds else float("nan"),
                "pairs_pruned_share": pairs_pruned if mode == MODE_APPROX else 0.0,
            }
        )
        _LOGGER.info(
            "Benchmark %s/%s: %.3fs, %d patterns", mode, variant, seconds, len(result)
        )
    return pd.DataFrame(rows, columns=COLUMNS)


def _threshold(value: Union[int, str]) -> Union[int, str]:
    text = str(value).strip()
    return text if text.endswith("%") else int(text)


def sweep(
    axis: str,
    values: Sequence[Union[int, str]],
    db_syb: SymbolicDatabase,
    spec: GranularitySpec,
    cfg: MinerConfig,
    *,
    modes: Sequence[str] = (MODE_EXACT, MODE_APPROX),
    repeat: int = 1,
    seed: int = 0,
) -> pd.DataFrame:
    """Benchmark the miners while one setting varies.

    Threshold axes replace one seasonality threshold and mine db_syb. Size axes mine
    a uniformly random database drawn by generate, with the given number of granules
    or series and the other dimension and the alphabet of db_syb.

    Args:
        axis: One of SWEEP_AXES.
        values: The settings, in order. Thresholds accept the ``"K%"`` form.
        db_syb: The symbolic database.
        spec: Granularity of the sequence databases.
        cfg: Miner settings the varied one replaces.
        modes: Optional; Modes to run, exact and/or approx.
        repeat: Optional; Runs per setting.
        seed: Optional; Seed of the generated databases.

    Returns:
        The benchmark rows of every setting, prefixed by the axis and value columns.

    Raises:
        StpmConfigError: The axis is unknown, no value or an invalid value is given.
    """
    if axis not in SWEEP_AXES:
        raise StpmConfigError(f"Unknown sweep axis {axis!r}")
    if not values:
        raise StpmConfigError(f"Sweep over {axis} needs at least one value")
    n_series = len(db_syb.series_ids)
    n_granules = db_syb.length // spec.factor_m
    alphabet = next(iter(db_syb)).alphabet
    base = build_sequence_db(db_syb, spec) if axis in SWEEP_THRESHOLDS else None

    frames = []
    for value in values:
        try:
            if base is not None:
                data: Dict[str, Any] = dict(cfg.season.raw_data)
                data[SWEEP_THRESHOLDS[axis]] = _threshold(value)
                season = SeasonConfig(data)  # type: ignore[arg-type]
                run_cfg = replace(cfg, season=season)
                run_syb, run_db = db_syb, base
            else:
                size = int(value)
                if size < 1:
                    raise StpmConfigError(f"Sweep sizes must be >= 1, got {size}")
                run_syb = generate(
                    size if axis == "series" else n_series,
                    size if axis == "granules" else n_granules,
                    [],
                    seed,
                    factor_m=spec.factor_m,
                    alphabet=alphabet,
                )
                run_cfg, run_db = cfg, build_sequence_db(run_syb, spec)
        except ValueError as err:
            raise StpmConfigError(f"Invalid {axis} value {value!r}") from err
        table = benchmark(run_db, run_syb, run_cfg, modes=modes, repeat=repeat)
        table.insert(0, "value", str(value))
        table.insert(0, "axis", axis)
        frames.append(table)
        _LOGGER.info("Sweep %s=%s done", axis, value)
    return pd.concat(frames, ignore_index=True)


def _mean(values: Sequence[float]) -> float:
    return sum(values) / len(values)
