# -*- coding: utf-8 -*-
"""Correlation graph model of the approximate miner."""
from typing import Dict
from typing import FrozenSet
from typing import List
from typing import Optional
from typing import Set
from typing import Tuple
from typing import TypedDict


class PairData(TypedDict):
    """Describing the scores of one series pair (source sorted before target).

    mu is None when neither orientation has a defined threshold (constant series).
    """

    source: str
    target: str
    nmi_source_target: float
    nmi_target_source: float
    mu: Optional[float]
    edge: bool


class GraphData(TypedDict):
    """Describing the data structure of the correlation graph dump."""

    vertices: List[str]
    pairs: List[PairData]


class CorrelationGraph:
    """Undirected graph of series whose correlation passes their pair threshold.

    Every pair of series is scored; only pairs with ``edge`` set are edges.
    """

    def __init__(self, raw_data: GraphData) -> None:
        """Initialize a CorrelationGraph object.

        Args:
            raw_data: A dictionary describing the graph. The structure is described by
                the GraphData class.
        """
        self.raw_data = raw_data
        self._pairs: Dict[FrozenSet[str], PairData] = {
            frozenset((pair["source"], pair["target"])): pair
            for pair in raw_data["pairs"]
        }

    @property
    def vertices(self) -> List[str]:
        """Return the series ids."""
        return self.raw_data["vertices"]

    @property
    def pairs(self) -> List[PairData]:
        """Return the scores of every series pair."""
        return self.raw_data["pairs"]

    @property
    def edges(self) -> List[Tuple[str, str]]:
        """Return the edges as sorted (source, target) pairs."""
        return [(pair["source"], pair["target"]) for pair in self.pairs if pair["edge"]]

    def pair(self, series_a: str, series_b: str) -> PairData:
        """Return the scores of a series pair in either order."""
        return self._pairs[frozenset((series_a, series_b))]

    def has_edge(self, series_a: str, series_b: str) -> bool:
        """Return True if the two distinct series are connected."""
        key = frozenset((series_a, series_b))
        return key in self._pairs and self._pairs[key]["edge"]

    def connected_series(self) -> Set[str]:
        """Return the series incident to at least one edge."""
        return {series for edge in self.edges for series in edge}

    def pruned_share(self) -> float:
        """Return the share of series pairs without an edge."""
        if not self.pairs:
            return 0.0
        return 1.0 - len(self.edges) / len(self.pairs)
