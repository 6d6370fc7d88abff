# -*- coding: utf-8 -*-
"""Symbolisation of raw series and construction of the sequence database."""
import logging
from itertools import groupby
from typing import Any
from typing import Dict
from typing import List
from typing import Mapping
from typing import Optional
from typing import Sequence

import numpy as np
from scipy.stats import norm

from .exceptions import StpmConfigError
from .exceptions import StpmDataError
from .model.database import Event
from .model.database import EventInstance
from .model.database import SequenceDatabase
from .model.granularity import GranularitySpec
from .model.symbols import SymbolicDatabase
from .model.symbols import SymbolicSeries
from .model.symbols import SymbolMapping

_LOGGER = logging.getLogger(__name__)


def symbolize(
    raw: Sequence[float], mapping: SymbolMapping, series_id: str = "X"
) -> SymbolicSeries:
    """Encode raw values into the symbols of a mapping.

    Args:
        raw: Raw values, one per fine granule.
        mapping: Threshold mapping of the series.
        series_id: Optional; Name of the series.

    Returns:
        The symbolic series. A value equal to a cut point takes the upper symbol.

    Raises:
        StpmDataError: A raw value is not finite.

    Example:
        >>> mapping = SymbolMapping({"alphabet": ["0", "1"], "thresholds": [0.5]})
        >>> symbolize([1.82, 1.25, 0.46, 0.0], mapping).labels()
        ['1', '1', '0', '0']
    """
    values = np.asarray(raw, dtype=float)
    bad = np.flatnonzero(~np.isfinite(values))
    if bad.size:
        raise StpmDataError(
            f"Non-finite raw value {values[bad[0]]}",
            line=int(bad[0]) + 1,
            column=series_id,
        )
    indices = np.searchsorted(np.asarray(mapping.thresholds), values, side="right")
    return SymbolicSeries(
        series_id, tuple(int(index) for index in indices), mapping.alphabet
    )


def sax_mapping(
    raw: Sequence[float], alphabet_size: int, alphabet: Optional[Sequence[str]] = None
) -> SymbolMapping:
    """Build a SAX mapping: standard normal breakpoints rescaled to the series.

    Args:
        raw: Raw values of the series.
        alphabet_size: Number of symbols, at least 2.
        alphabet: Optional; Symbols to use. Defaults to "0", "1", ...

    Returns:
        A threshold mapping whose cut points split a normal fit of the series into
        equiprobable bands.

    Raises:
        StpmConfigError: The alphabet size is below 2 or does not match the alphabet.
    """
    if alphabet_size < 2:
        raise StpmConfigError(f"SAX alphabet size must be >= 2, got {alphabet_size}")
    symbols = [str(i) for i in range(alphabet_size)] if alphabet is None else alphabet
    if len(symbols) != alphabet_size:
        raise StpmConfigError(f"SAX alphabet {symbols} has not {alphabet_size} symbols")

    values = np.asarray(raw, dtype=float)
    values = values[np.isfinite(values)]
    mean = float(values.mean()) if values.size else 0.0
    std = float(values.std()) if values.size else 0.0
    if std == 0.0:
        std = 1.0
    breakpoints = norm.ppf(np.arange(1, alphabet_size) / alphabet_size)
    return SymbolMapping(
        {
            "alphabet": list(symbols),
            "thresholds": [float(mean + std * cut) for cut in breakpoints],
        }
    )


def mapping_for(
    series_id: str, raw: Sequence[float], settings: Mapping[str, Dict[str, Any]]
) -> SymbolMapping:
    """Select the mapping of a series from the symbol settings of a run.

    Args:
        series_id: Name of the series.
        raw: Raw values of the series (used by the SAX backend).
        settings: Series id (or "default") to either ``{alphabet, thresholds}`` or
            ``{sax: size}``.

    Returns:
        The mapping of the series.

    Raises:
        StpmConfigError: No setting applies to the series.
    """
    setting = settings.get(series_id, settings.get("default"))
    if setting is None:
        raise StpmConfigError(f"No symbol mapping configured for series {series_id!r}")
    if "sax" in setting:
        return sax_mapping(raw, int(setting["sax"]), setting.get("alphabet"))
    return SymbolMapping(
        {"alphabet": setting["alphabet"], "thresholds": setting["thresholds"]}
    )


def build_symbolic_database(
    columns: Mapping[str, Sequence[float]], settings: Mapping[str, Dict[str, Any]]
) -> SymbolicDatabase:
    """Symbolize every raw series of a run.

    Args:
        columns: Series id to its raw values.
        settings: Symbol settings, see mapping_for.

    Returns:
        The symbolic database.
    """
    return SymbolicDatabase(
        [
            symbolize(values, mapping_for(series_id, values, settings), series_id)
            for series_id, values in columns.items()
        ]
    )


def build_sequence_db(db: SymbolicDatabase, spec: GranularitySpec) -> SequenceDatabase:
    """Group m adjacent symbols into coarse granules of event instances.

    Within each coarse granule and series, every maximal run of one symbol becomes an
    event instance over fine positions. Runs never cross granule boundaries and a
    trailing partial granule is dropped.

    Args:
        db: The symbolic database.
        spec: Granularity relation between the fine and coarse granules.

    Returns:
        The temporal sequence database with N = floor(L / m) granules.

    Raises:
        StpmDataError: The series are shorter than one coarse granule.
    """
    m = spec.factor_m
    if len(db) and db.length < m:
        raise StpmDataError(
            f"Series of length {db.length} are shorter than one granule of {m}"
        )
    n_granules = spec.coarse_count(db.length)
    if n_granules * m < db.length:
        _LOGGER.info(
            "Dropping trailing partial granule (%d fine granules)",
            db.length - n_granules * m,
        )

    granules: List[List[EventInstance]] = [[] for _ in range(n_granules)]
    for series in db:
        labels = series.alphabet
        for index in range(n_granules):
            start, end = spec.fine_span(index + 1)
            chunk = series.symbols[start - 1 : end]
            for symbol, run in groupby(chunk):
                length = sum(1 for _ in run)
                granules[index].append(
                    EventInstance(
                        Event(series.series_id, labels[symbol]),
                        start,
                        start + length - 1,
                    )
                )
                start += length

    return SequenceDatabase(granules, m)


def reconstruct_symbols(seq_db: SequenceDatabase, series_id: str) -> List[str]:
    """Expand the instances of a series back into one symbol per fine granule.

    Args:
        seq_db: The sequence database.
        series_id: Name of the series.

    Returns:
        The symbol labels of the first N * m fine granules.
    """
    labels: List[str] = []
    for instances in seq_db:
        own = sorted(
            (inst for inst in instances if inst.event.series == series_id),
            key=lambda inst: inst.start,
        )
        for inst in own:
            labels.extend([inst.event.symbol] * (inst.end - inst.start + 1))
    return labels
