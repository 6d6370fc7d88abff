# -*- coding: utf-8 -*-
"""Approximate miner (A-STPM): mine only the series the correlation graph connects.

Each pair of series is scored with the normalized mutual information in both
directions and compared to the smallest threshold mu for which a pair of their events
could still reach minSeason seasons. Only the series incident to an edge are mined,
and 2-event groups across series need an edge between them.
"""
import logging
from itertools import combinations
from typing import List
from typing import Optional
from typing import Tuple

from .bounds import mu_threshold
from .const import MODE_APPROX
from .helpers import fan_out
from .information import ProbTable
from .information import nmi
from .miner import run_levels
from .model.config import MinerConfig
from .model.database import Event
from .model.database import SequenceDatabase
from .model.graph import CorrelationGraph
from .model.graph import PairData
from .model.result import MiningResult
from .model.season import ResolvedSeasonConfig
from .model.symbols import SymbolicDatabase

_LOGGER = logging.getLogger(__name__)


def pair_threshold(
    source: str,
    target: str,
    probs: ProbTable,
    thresholds: ResolvedSeasonConfig,
    n_granules: int,
) -> Optional[float]:
    """Return the smallest mu over both orientations and the events of the pair.

    In the orientation (X, Y), lambda1 is the smallest non-zero symbol probability of
    X and lambda2 ranges over the non-zero symbol probabilities of Y.

    Args:
        source: One series of the pair.
        target: The other series.
        probs: Probability table of the symbolic database.
        thresholds: Resolved seasonality thresholds.
        n_granules: Number of coarse granules of the sequence database.

    Returns:
        The raw mu of the pair, or None when both series are constant.
    """
    candidates: List[float] = []
    for series_x, series_y in ((source, target), (target, source)):
        lambda1 = min(probs.nonzero_marginals(series_x))
        if lambda1 >= 1.0:
            continue
        candidates.extend(
            mu_threshold(
                lambda1,
                lambda2,
                thresholds.min_season,
                thresholds.min_density,
                n_granules,
            )
            for lambda2 in probs.nonzero_marginals(series_y)
        )
    return min(candidates) if candidates else None


def _score_pair(
    pair: Tuple[str, str],
    probs: ProbTable,
    thresholds: ResolvedSeasonConfig,
    n_granules: int,
) -> PairData:
    source, target = pair
    nmi_st = nmi(source, target, probs)
    nmi_ts = nmi(target, source, probs)
    mu = pair_threshold(source, target, probs, thresholds, n_granules)
    constant = any(len(probs.nonzero_marginals(series)) < 2 for series in pair)
    if constant or mu is None or mu > 1.0:
        edge = False
    elif mu <= 0.0:
        edge = True
    else:
        edge = max(nmi_st, nmi_ts) >= mu
    return {
        "source": source,
        "target": target,
        "nmi_source_target": nmi_st,
        "nmi_target_source": nmi_ts,
        "mu": mu,
        "edge": edge,
    }


def build_correlation_graph(
    db_syb: SymbolicDatabase,
    thresholds: ResolvedSeasonConfig,
    n_granules: int,
    *,
    threads: int = 1,
) -> CorrelationGraph:
    """Score every pair of series and keep the correlated ones as edges.

    A pair is an edge when max(NMI(X;Y), NMI(Y;X)) >= mu. A mu at most 0 admits the
    pair whatever its NMI, a mu above 1 prunes it. Pairs involving a constant series
    are never edges.

    Args:
        db_syb: The symbolic database.
        thresholds: Resolved seasonality thresholds.
        n_granules: Number of coarse granules of the sequence database.
        threads: Optional; Bound of the per-pair parallel fan-out.

    Returns:
        The correlation graph.
    """
    probs = ProbTable.from_database(db_syb)
    pairs = list(combinations(probs.series_ids, 2))
    scored = fan_out(
        lambda pair: _score_pair(pair, probs, thresholds, n_granules), pairs, threads
    )

    admitted = pruned = 0
    for data in scored:
        mu = data["mu"]
        if mu is not None and mu <= 0.0 and data["edge"]:
            admitted += 1
            _LOGGER.debug(
                "Pair (%s, %s): mu=%.4f <= 0, admitted",
                data["source"],
                data["target"],
                mu,
            )
        elif mu is not None and mu > 1.0:
            pruned += 1
            _LOGGER.debug(
                "Pair (%s, %s): mu=%.4f > 1, pruned", data["source"], data["target"], mu
            )
    if admitted or pruned:
        _LOGGER.info(
            "Clamped mu: %d pairs admitted unconditionally, %d pruned", admitted, pruned
        )

    graph = CorrelationGraph({"vertices": probs.series_ids, "pairs": scored})
    _LOGGER.info(
        "Correlation graph: %d series, %d of %d pairs are edges",
        len(graph.vertices),
        len(graph.edges),
        len(graph.pairs),
    )
    return graph


def mine_approx(
    db: SequenceDatabase,
    db_syb: SymbolicDatabase,
    cfg: MinerConfig,
    *,
    graph: Optional[CorrelationGraph] = None,
) -> MiningResult:
    """Mine the frequent seasonal patterns among correlated series only.

    Single events come from the series incident to at least one edge. A 2-event
    group is admitted when its two series share an edge, or when both events belong
    to one such series. Higher levels proceed as in the exact miner.

    Args:
        db: The sequence database.
        db_syb: The symbolic database db was built from.
        cfg: Miner settings.
        graph: Optional; A correlation graph already built for these inputs.

    Returns:
        The frequent seasonal patterns found, a subset of the exact result.
    """
    if graph is None:
        thresholds = cfg.season.resolve(len(db))
        correlation = build_correlation_graph(
            db_syb, thresholds, len(db), threads=cfg.threads
        )
    else:
        correlation = graph
    connected = correlation.connected_series()
    _LOGGER.info(
        "Approximation keeps %d of %d series",
        len(connected),
        len(correlation.vertices),
    )

    def admit_pair(event_a: Event, event_b: Event) -> bool:
        if event_a.series == event_b.series:
            return event_a.series in connected
        return correlation.has_edge(event_a.series, event_b.series)

    return run_levels(db, cfg, MODE_APPROX, series=connected, admit_pair=admit_pair)
