# -*- coding: utf-8 -*-
"""Symbolic time series model."""
import math
from dataclasses import dataclass
from typing import Dict
from typing import Iterator
from typing import List
from typing import Sequence
from typing import Tuple
from typing import TypedDict

from stpm.exceptions import StpmConfigError
from stpm.exceptions import StpmDataError


class SymbolMappingData(TypedDict):
    """Describing the data structure of a threshold symbol mapping."""

    alphabet: List[str]
    thresholds: List[float]


class SymbolMapping:
    """Class mapping raw value ranges to the symbols of an alphabet.

    A raw value v maps to symbol k when thresholds[k-1] <= v < thresholds[k], the
    extremes being open-ended. A value equal to a cut point takes the upper symbol.

    Attributes:
        alphabet: Ordered symbols of the series.
        thresholds: Ascending cut points, one less than the alphabet size.
    """

    def __init__(self, raw_data: SymbolMappingData) -> None:
        """Initialize a SymbolMapping object.

        Args:
            raw_data: A dictionary describing the mapping. The structure is described
                by the SymbolMappingData class.

        Raises:
            StpmConfigError: The alphabet or the thresholds are invalid.
        """
        alphabet = [str(symbol) for symbol in raw_data["alphabet"]]
        thresholds = [float(cut) for cut in raw_data["thresholds"]]
        if len(alphabet) < 2:
            raise StpmConfigError("A symbol alphabet needs at least 2 symbols")
        if len(set(alphabet)) != len(alphabet):
            raise StpmConfigError(f"Duplicated symbols in alphabet {alphabet}")
        if len(thresholds) != len(alphabet) - 1:
            raise StpmConfigError(
                f"{len(alphabet)} symbols need {len(alphabet) - 1} thresholds,"
                f" got {len(thresholds)}"
            )
        if any(not math.isfinite(cut) for cut in thresholds):
            raise StpmConfigError(f"Thresholds must be finite, got {thresholds}")
        if any(low >= high for low, high in zip(thresholds, thresholds[1:])):
            raise StpmConfigError(f"Thresholds must be ascending: {thresholds}")
        self.raw_data: SymbolMappingData = {
            "alphabet": alphabet,
            "thresholds": thresholds,
        }

    @property
    def alphabet(self) -> Tuple[str, ...]:
        """Return the ordered symbols."""
        return tuple(self.raw_data["alphabet"])

    @property
    def thresholds(self) -> Tuple[float, ...]:
        """Return the ascending cut points."""
        return tuple(self.raw_data["thresholds"])

    def band(self, index: int) -> Tuple[float, float]:
        """Return the raw value interval [low, high) of a symbol index."""
        cuts = self.thresholds
        low = cuts[index - 1] if index > 0 else -math.inf
        high = cuts[index] if index < len(cuts) else math.inf
        return low, high


@dataclass(frozen=True)
class SymbolicSeries:
    """Symbolic encoding of one raw series at the fine granularity.

    Attributes:
        series_id: Name of the series.
        symbols: Symbol index of every fine granule, position 1 first.
        alphabet: Ordered symbols the indices refer to.
    """

    series_id: str
    symbols: Tuple[int, ...]
    alphabet: Tuple[str, ...]

    def __post_init__(self) -> None:
        """Check every index refers to the alphabet."""
        size = len(self.alphabet)
        for position, index in enumerate(self.symbols, start=1):
            if not 0 <= index < size:
                raise StpmDataError(
                    f"Symbol index {index} outside alphabet {list(self.alphabet)}",
                    line=position,
                    column=self.series_id,
                )

    def __len__(self) -> int:
        """Return the number of fine granules."""
        return len(self.symbols)

    def labels(self) -> List[str]:
        """Return the symbols as alphabet labels."""
        return [self.alphabet[index] for index in self.symbols]

    @classmethod
    def from_labels(
        cls, series_id: str, labels: Sequence[str], alphabet: Sequence[str]
    ) -> "SymbolicSeries":
        """Build a series from symbol labels.

        Args:
            series_id: Name of the series.
            labels: Symbol label of every fine granule.
            alphabet: Ordered symbols.

        Returns:
            The symbolic series.

        Raises:
            StpmDataError: A label is not in the alphabet.
        """
        lookup = {symbol: index for index, symbol in enumerate(alphabet)}
        symbols = []
        for position, label in enumerate(labels, start=1):
            if label not in lookup:
                raise StpmDataError(
                    f"Unknown symbol {label!r}", line=position, column=series_id
                )
            symbols.append(lookup[label])
        return cls(series_id, tuple(symbols), tuple(alphabet))


class SymbolicDatabase:
    """Collection of equal-length symbolic series."""

    def __init__(self, series: Sequence[SymbolicSeries]) -> None:
        """Initialize a SymbolicDatabase object.

        Args:
            series: The symbolic series, all of the same length.

        Raises:
            StpmDataError: Series ids are duplicated or lengths differ.
        """
        self._series: Dict[str, SymbolicSeries] = {}
        for item in series:
            if item.series_id in self._series:
                raise StpmDataError(f"Duplicated series id {item.series_id!r}")
            self._series[item.series_id] = item

        lengths = {len(item) for item in series}
        if len(lengths) > 1:
            detail = ", ".join(f"{item.series_id}={len(item)}" for item in series)
            raise StpmDataError(f"Series of unequal length: {detail}")
        self._length = lengths.pop() if lengths else 0

    @classmethod
    def from_strings(
        cls, rows: Dict[str, str], alphabet: Sequence[str] = ("0", "1")
    ) -> "SymbolicDatabase":
        """Build a database from one-character-per-symbol strings.

        Args:
            rows: Series id to a string of symbols, e.g. ``{"C": "110100"}``.
            alphabet: Optional; Ordered symbols. Binary by default.

        Returns:
            The symbolic database.
        """
        return cls(
            [
                SymbolicSeries.from_labels(series_id, list(text), alphabet)
                for series_id, text in rows.items()
            ]
        )

    @property
    def length(self) -> int:
        """Return the number of fine granules of every series."""
        return self._length

    @property
    def series_ids(self) -> List[str]:
        """Return the series ids in insertion order."""
        return list(self._series)

    def __getitem__(self, series_id: str) -> SymbolicSeries:
        """Return a series by id."""
        return self._series[series_id]

    def __iter__(self) -> Iterator[SymbolicSeries]:
        """Iterate over the series in insertion order."""
        return iter(self._series.values())

    def __len__(self) -> int:
        """Return the number of series."""
        return len(self._series)
