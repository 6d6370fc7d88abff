# -*- coding: utf-8 -*-
"""Command-line interface."""
import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Any
from typing import Dict
from typing import Iterator
from typing import List
from typing import Optional
from typing import Tuple

import click
import yaml

from .bench import benchmark
from .bench import sweep
from .const import MODES
from .const import SWEEP_AXES
from .exceptions import StpmError
from .io import load_config
from .io import load_plants
from .io import write_json
from .io import write_raw_csv
from .io import write_symbolic_csv
from .model.config import RunConfig
from .model.config import RunConfigData
from .model.symbols import SymbolMapping
from .oracle import differential
from .runner import StpmRunner
from .synth import declared_season_config
from .synth import emit_raw
from .synth import generate
from .synth import planted_patterns

_LOGGER = logging.getLogger(__name__)

_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


@contextmanager
def _reported() -> Iterator[None]:
    """Turn library errors into click errors (exit status 1)."""
    try:
        yield
    except StpmError as err:
        raise click.ClickException(str(err)) from err


def _run_config(config_path: Optional[Path], overrides: Dict[str, Any]) -> RunConfig:
    """Merge a configuration file with the command-line flags given."""
    raw: Dict[str, Any] = dict(load_config(config_path)) if config_path else {}
    for key, value in overrides.items():
        if value is None:
            continue
        if isinstance(value, dict):
            current = raw.get(key, {})
            nested = {
                k: _bounds(v, current.get(k)) if isinstance(v, list) else v
                for k, v in value.items()
                if v is not None
            }
            if nested:
                raw[key] = {**raw.get(key, {}), **nested}
        else:
            raw[key] = value
    data: RunConfigData = raw  # type: ignore[assignment]
    return RunConfig(data)


def _bounds(given: List[Optional[int]], current: Optional[List[int]]) -> List[int]:
    """Complete a pair of bounds given on the command line with configured ones."""
    if None not in given:
        return given  # type: ignore[return-value]
    if current is None:
        raise click.UsageError(
            "--dist-min and --dist-max are needed together without a configured"
            " dist_interval"
        )
    return [int(b if b is not None else c) for b, c in zip(given, current)]


def _overrides(
    input_path: Optional[Path],
    mode: Optional[str],
    factor_m: Optional[int],
    max_pattern_size: Optional[int],
    max_period: Optional[str],
    min_density: Optional[str],
    dist_min: Optional[int],
    dist_max: Optional[int],
    dist_interval: Optional[Tuple[int, int]],
    min_season: Optional[int],
    epsilon: Optional[int],
    min_overlap: Optional[int],
    apriori: Optional[bool],
    transitivity: Optional[bool],
    threads: Optional[int],
    symbolic: Optional[bool],
) -> Dict[str, Any]:
    low, high = dist_interval if dist_interval else (None, None)
    bounds: List[Optional[int]] = [
        dist_min if dist_min is not None else low,
        dist_max if dist_max is not None else high,
    ]
    season = {
        "max_period": max_period,
        "min_density": min_density,
        "dist_interval": None if bounds == [None, None] else bounds,
        "min_season": min_season,
    }
    return {
        "input": str(input_path) if input_path else None,
        "mode": mode,
        "factor_m": factor_m,
        "max_pattern_size": max_pattern_size,
        "season": season,
        "relation": {"epsilon": epsilon, "min_overlap": min_overlap},
        "pruning": {"apriori": apriori, "transitivity": transitivity},
        "threads": threads,
        "symbolic": symbolic,
    }


def run_options(func: Any) -> Any:
    """Attach the options shared by the commands reading a run configuration."""
    options = [
        click.option(
            "--config",
            "config_path",
            type=click.Path(dir_okay=False, path_type=Path),
            help="YAML run configuration.",
        ),
        click.option(
            "--input",
            "input_path",
            type=click.Path(dir_okay=False, path_type=Path),
            help="Input CSV, one series per column.",
        ),
        click.option("--mode", type=click.Choice(MODES), help="Miner to run."),
        click.option(
            "--factor-m", type=click.IntRange(min=1), help="Granule factor m."
        ),
        click.option(
            "--max-pattern-size", type=click.IntRange(min=1), help="Largest pattern."
        ),
        click.option("--max-period", help="maxPeriod, integer or percentage."),
        click.option("--min-density", help="minDensity, integer or percentage."),
        click.option("--dist-min", type=int, help="Lower bound of distInterval."),
        click.option("--dist-max", type=int, help="Upper bound of distInterval."),
        click.option(
            "--dist-interval",
            type=(int, int),
            default=None,
            help="Alias setting both bounds, MIN MAX.",
        ),
        click.option("--min-season", type=click.IntRange(min=1), help="minSeason."),
        click.option("--epsilon", type=click.IntRange(min=0), help="Tolerance buffer."),
        click.option(
            "--min-overlap", type=click.IntRange(min=1), help="Minimal overlap d_o."
        ),
        click.option(
            "--apriori/--no-apriori", default=None, help="maxSeason pruning."
        ),
        click.option(
            "--transitivity/--no-transitivity",
            default=None,
            help="Transitivity pruning.",
        ),
        click.option("--threads", type=click.IntRange(min=1), help="Worker threads."),
        click.option(
            "--symbolic/--raw-values",
            default=None,
            help="Cells are symbols rather than raw values.",
        ),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _config_from(kwargs: Dict[str, Any], **outputs: Optional[Path]) -> RunConfig:
    config_path = kwargs.pop("config_path")
    overrides = _overrides(**kwargs)
    overrides.update(
        {key: str(path) for key, path in outputs.items() if path is not None}
    )
    return _run_config(config_path, overrides)


@click.group()
@click.version_option()
@click.option("-v", "--verbose", count=True, help="Repeat for more logging.")
def main(verbose: int) -> None:
    """Seasonal temporal pattern mining."""
    logging.basicConfig(
        level=_LEVELS[min(verbose, len(_LEVELS) - 1)],
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


@main.command()
@run_options
@click.option(
    "--output", type=click.Path(dir_okay=False, path_type=Path), help="Patterns JSON."
)
@click.option(
    "--manifest", type=click.Path(dir_okay=False, path_type=Path), help="Run manifest."
)
@click.option(
    "--dump-graph",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Correlation graph JSON (approx mode).",
)
def mine(
    output: Optional[Path],
    manifest: Optional[Path],
    dump_graph: Optional[Path],
    **kwargs: Any,
) -> None:
    """Mine the frequent seasonal temporal patterns of a CSV file."""
    with _reported():
        config = _config_from(
            kwargs, output=output, manifest=manifest, graph=dump_graph
        )
        result = StpmRunner(config).run()
    click.echo(f"{len(result)} frequent seasonal patterns")
    if config.output is None:
        for mined in result:
            click.echo(f"{mined.pattern}\t{len(mined.support)}\t{mined.max_season}")


@main.command()
@run_options
@click.option(
    "--out",
    type=click.Path(dir_okay=False, path_type=Path),
    required=True,
    help="Correlation graph JSON.",
)
def graph(out: Path, **kwargs: Any) -> None:
    """Build and dump the correlation graph of a CSV file."""
    with _reported():
        runner = StpmRunner(_config_from(kwargs))
        correlation = runner.correlation_graph()
        write_json(out, correlation.raw_data)
    click.echo(
        f"{len(correlation.edges)} edges between {len(correlation.vertices)} series"
    )


@main.command()
@click.option("--series", "n_series", type=click.IntRange(min=1), required=True)
@click.option("--granules", "n_granules", type=click.IntRange(min=1), required=True)
@click.option(
    "--plants",
    "plants_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="JSON or YAML list of plants.",
)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--factor-m", type=click.IntRange(min=1), default=3, show_default=True)
@click.option(
    "--out", type=click.Path(dir_okay=False, path_type=Path), required=True
)
@click.option(
    "--raw", is_flag=True, help="Write raw values (threshold 0.5) instead of symbols."
)
@click.option("--start", default="2020-01-01", show_default=True, help="First stamp.")
def gen(
    n_series: int,
    n_granules: int,
    plants_path: Optional[Path],
    seed: int,
    factor_m: int,
    out: Path,
    raw: bool,
    start: str,
) -> None:
    """Generate a binary symbolic database with planted patterns."""
    with _reported():
        plants = load_plants(plants_path) if plants_path else []
        db = generate(n_series, n_granules, plants, seed, factor_m=factor_m)
        if raw:
            mapping = SymbolMapping({"alphabet": ["0", "1"], "thresholds": [0.5]})
            write_raw_csv(emit_raw(db, mapping, seed), out, start)
        else:
            write_symbolic_csv(db, out, start)
        if plants:
            season = declared_season_config(plants)
            click.echo(
                yaml.safe_dump(
                    {
                        "factor_m": factor_m,
                        "season": dict(season.raw_data),
                        "planted": [str(p) for p in planted_patterns(plants)],
                    },
                    sort_keys=False,
                    allow_unicode=True,
                ),
                nl=False,
            )


@main.command("oracle-diff")
@click.option("--seeds", type=click.IntRange(min=1), default=200, show_default=True)
@click.option("--first-seed", type=int, default=0, show_default=True)
@click.option("--max-series", type=click.IntRange(2, 6), default=6, show_default=True)
@click.option(
    "--max-granules", type=click.IntRange(5, 30), default=30, show_default=True
)
@click.option("--factor-m", type=click.IntRange(min=1), default=3, show_default=True)
@click.option(
    "--max-pattern-size", type=click.IntRange(1, 3), default=3, show_default=True
)
def oracle_diff(
    seeds: int,
    first_seed: int,
    max_series: int,
    max_granules: int,
    factor_m: int,
    max_pattern_size: int,
) -> None:
    """Compare the exact miner with the brute-force oracle on random databases."""
    with _reported():
        report = differential(
            range(first_seed, first_seed + seeds),
            max_series=max_series,
            max_granules=max_granules,
            factor_m=factor_m,
            max_pattern_size=max_pattern_size,
        )
    for name, count in report.generated.items():
        click.echo(f"generated groups ({name}): {count}")
    if not report.ok:
        details = "; ".join(f"seed {seed}: {text}" for seed, text in report.mismatches)
        raise click.ClickException(f"{len(report.mismatches)} mismatches: {details}")
    click.echo(f"{len(report.seeds)} seeds agree")


@main.command()
@run_options
@click.option(
    "--modes", default="exact,approx", show_default=True, help="Comma separated."
)
@click.option("--repeat", type=click.IntRange(min=1), default=3, show_default=True)
@click.option("--variants", is_flag=True, help="Also run every pruning variant.")
@click.option(
    "--sweep", "axis", type=click.Choice(SWEEP_AXES), help="Setting to vary."
)
@click.option("--values", help="Comma separated settings of the swept axis.")
@click.option(
    "--out", type=click.Path(dir_okay=False, path_type=Path), help="Table as CSV."
)
def bench(
    modes: str,
    repeat: int,
    variants: bool,
    axis: Optional[str],
    values: Optional[str],
    out: Optional[Path],
    **kwargs: Any,
) -> None:
    """Benchmark the exact and approximate miners on a CSV file.

    With --sweep, the miners run once per value of one threshold, or on generated
    databases of each size for the granules and series axes.
    """
    if axis is not None and not values:
        raise click.UsageError("--sweep needs --values")
    mode_list = [mode.strip() for mode in modes.split(",") if mode.strip()]
    with _reported():
        runner = StpmRunner(_config_from(kwargs))
        if axis is None:
            table = benchmark(
                runner.sequence_db,
                runner.symbolic_db,
                runner.config.miner,
                modes=mode_list,
                repeat=repeat,
                variants=variants,
            )
        else:
            table = sweep(
                axis,
                [value.strip() for value in str(values).split(",") if value.strip()],
                runner.symbolic_db,
                runner.config.granularity,
                runner.config.miner,
                modes=mode_list,
                repeat=repeat,
                seed=runner.config.seed,
            )
    if out is not None:
        out.parent.mkdir(parents=True, exist_ok=True)
        table.to_csv(out, index=False)
    click.echo(table.to_string(index=False))


if __name__ == "__main__":
    main(prog_name="stpm")  # pragma: no cover
