# -*- coding: utf-8 -*-
"""CSV ingestion, configuration loading and JSON emission."""
import json
import logging
from pathlib import Path
from typing import Any
from typing import Dict
from typing import List
from typing import Mapping
from typing import NamedTuple
from typing import Optional
from typing import Sequence

import numpy as np
import pandas as pd
import yaml
from pytz import timezone

from .const import TIMESTAMP_COLUMN
from .exceptions import StpmConfigError
from .exceptions import StpmDataError
from .model.config import RunConfigData
from .model.plant import PlantData
from .model.plant import PlantSpec
from .model.symbols import SymbolicDatabase
from .model.symbols import SymbolicSeries

_LOGGER = logging.getLogger(__name__)

# header is line 1 of the file
_FIRST_DATA_LINE = 2


class CsvTable(NamedTuple):
    """Series columns of a CSV file and its optional timestamps."""

    columns: Dict[str, List[Any]]
    timestamps: Optional[pd.DatetimeIndex]


def _read_frame(path: Path) -> pd.DataFrame:
    try:
        frame = pd.read_csv(
            path, dtype=str, keep_default_na=False, skipinitialspace=True
        )
    except FileNotFoundError as err:
        raise StpmConfigError(f"Input file {str(path)!r} does not exist") from err
    except pd.errors.EmptyDataError as err:
        raise StpmDataError(f"Empty CSV file {str(path)!r}", line=1) from err
    except pd.errors.ParserError as err:
        raise StpmDataError(f"Malformed CSV file {str(path)!r}: {err}") from err
    frame.columns = [str(name).strip() for name in frame.columns]
    return frame


def _timestamps(frame: pd.DataFrame, tz_name: str) -> pd.DatetimeIndex:
    texts = frame[TIMESTAMP_COLUMN]
    parsed = pd.to_datetime(texts, errors="coerce", utc=False)
    bad = np.flatnonzero(parsed.isna().to_numpy())
    if bad.size:
        row = int(bad[0])
        raise StpmDataError(
            f"Invalid timestamp {texts.iloc[row]!r}",
            line=row + _FIRST_DATA_LINE,
            column=TIMESTAMP_COLUMN,
        )
    index = pd.DatetimeIndex(parsed)
    if index.tz is None:
        index = index.tz_localize(timezone(tz_name))
    steps = np.flatnonzero(np.diff(index.asi8) <= 0)
    if steps.size:
        row = int(steps[0]) + 1
        raise StpmDataError(
            "Timestamps must be strictly increasing",
            line=row + _FIRST_DATA_LINE,
            column=TIMESTAMP_COLUMN,
        )
    return index


def read_csv_table(
    path: Path, *, symbolic: bool = False, tz_name: str = "UTC"
) -> CsvTable:
    """Read one series per column, with an optional ``timestamp`` column.

    Args:
        path: The CSV file.
        symbolic: Optional; Read the cells as symbols rather than numbers.
        tz_name: Optional; Timezone of naive timestamps.

    Returns:
        The series columns in file order and the localized timestamps, if any.

    Raises:
        StpmConfigError: The file does not exist.
        StpmDataError: The file is malformed; the message gives line and column.
    """
    frame = _read_frame(path)
    timestamps = None
    if TIMESTAMP_COLUMN in frame.columns:
        timestamps = _timestamps(frame, tz_name)
        frame = frame.drop(columns=[TIMESTAMP_COLUMN])
    if not len(frame.columns):
        raise StpmDataError(f"No series column in {str(path)!r}", line=1)

    columns: Dict[str, List[Any]] = {}
    for name in frame.columns:
        texts = frame[name].str.strip()
        missing = np.flatnonzero((texts == "").to_numpy())
        if missing.size:
            raise StpmDataError(
                "Missing value", line=int(missing[0]) + _FIRST_DATA_LINE, column=name
            )
        if symbolic:
            columns[name] = texts.tolist()
            continue
        values = pd.to_numeric(texts, errors="coerce")
        bad = np.flatnonzero(~np.isfinite(values.to_numpy(dtype=float)))
        if bad.size:
            row = int(bad[0])
            raise StpmDataError(
                f"Non-numeric value {texts.iloc[row]!r}",
                line=row + _FIRST_DATA_LINE,
                column=name,
            )
        columns[name] = values.to_numpy(dtype=float).tolist()
    _LOGGER.info("Read %d series of %d rows from %s", len(columns), len(frame), path)
    return CsvTable(columns, timestamps)


def symbolic_database_from_table(table: CsvTable) -> SymbolicDatabase:
    """Build a symbolic database from a table read with ``symbolic=True``.

    The alphabet of every series is the sorted set of symbols observed in the file.
    """
    alphabet = sorted(
        {symbol for column in table.columns.values() for symbol in column}
    )
    return SymbolicDatabase(
        [
            SymbolicSeries.from_labels(name, column, alphabet)
            for name, column in table.columns.items()
        ]
    )


def write_symbolic_csv(
    db: SymbolicDatabase, path: Path, start: Optional[str] = None, freq: str = "h"
) -> None:
    """Write a symbolic database, one series per column.

    Args:
        db: The symbolic database.
        path: The CSV file to write.
        start: Optional; First timestamp. No timestamp column when omitted.
        freq: Optional; Spacing of the timestamps, as a pandas frequency.
    """
    frame = pd.DataFrame({series.series_id: series.labels() for series in db})
    _write_frame(frame, path, start, freq)


def write_raw_csv(
    columns: Mapping[str, Sequence[float]],
    path: Path,
    start: Optional[str] = None,
    freq: str = "h",
) -> None:
    """Write raw series, one per column (see write_symbolic_csv)."""
    frame = pd.DataFrame({name: list(values) for name, values in columns.items()})
    _write_frame(frame, path, start, freq)


def _write_frame(
    frame: pd.DataFrame, path: Path, start: Optional[str], freq: str
) -> None:
    if start is not None:
        stamps = pd.date_range(start=start, periods=len(frame), freq=freq, tz="UTC")
        frame.insert(0, TIMESTAMP_COLUMN, stamps.strftime("%Y-%m-%dT%H:%M:%S%z"))
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False)
    _LOGGER.info("Wrote %d rows to %s", len(frame), path)


def _load_yaml(path: Path) -> Any:
    try:
        with path.open(encoding="utf-8") as stream:
            return yaml.safe_load(stream)
    except FileNotFoundError as err:
        raise StpmConfigError(f"File {str(path)!r} does not exist") from err
    except yaml.YAMLError as err:
        mark = getattr(err, "problem_mark", None)
        where = f" (line {mark.line + 1}, column {mark.column + 1})" if mark else ""
        raise StpmConfigError(f"Invalid YAML in {str(path)!r}{where}: {err}") from err


def load_config(path: Path) -> RunConfigData:
    """Load a run configuration file.

    Args:
        path: YAML file mirroring the RunConfig fields.

    Returns:
        The raw configuration, to be merged with command-line overrides.

    Raises:
        StpmConfigError: The file is missing, is not YAML or is not a mapping.
    """
    data = _load_yaml(path)
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise StpmConfigError(f"Configuration {str(path)!r} must be a mapping")
    return data  # type: ignore[return-value]


def load_plants(path: Path) -> List[PlantSpec]:
    """Load plant descriptions from a JSON or YAML list.

    Args:
        path: The plants file.

    Returns:
        The plants.

    Raises:
        StpmConfigError: The file is missing or is not a list of mappings.
    """
    data = _load_yaml(path)
    if not isinstance(data, list) or not all(isinstance(item, dict) for item in data):
        raise StpmConfigError(f"Plants file {str(path)!r} must hold a list of plants")
    plants: List[PlantData] = data
    return [PlantSpec(item) for item in plants]


def write_json(path: Path, data: Any) -> None:
    """Write a JSON document with a stable layout (indent 2, trailing newline)."""
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data, indent=2, ensure_ascii=False) + "\n", "utf-8")
    _LOGGER.info("Wrote %s", path)


def read_json(path: Path) -> Any:
    """Read a JSON document.

    Raises:
        StpmDataError: The file is not valid JSON.
    """
    try:
        return json.loads(path.read_text("utf-8"))
    except json.JSONDecodeError as err:
        raise StpmDataError(
            f"Invalid JSON in {str(path)!r}: {err.msg}", line=err.lineno
        ) from err
