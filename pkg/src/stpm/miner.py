# -*- coding: utf-8 -*-
"""Exact frequent seasonal temporal pattern miner (E-STPM).

Level 1 scans the sequence database once into HLH1. Level 2 verifies the relations of
the instance pairs of every candidate event pair into HLH2. Each level k >= 3 extends
the candidate (k-1)-patterns with one event whose instance comes last, checking the
new relations against HLH2 before touching any granule.

Support sets are granule bitmaps, intersected before any instance is looked at, and
the instance pairs of the surviving granules are classified column-wise.
"""
import logging
import time
from typing import Callable
from typing import Collection
from typing import Dict
from typing import Iterable
from typing import List
from typing import Mapping
from typing import Optional
from typing import Sequence
from typing import Set
from typing import Tuple

import numpy as np

from .const import MODE_EXACT
from .helpers import fan_out
from .model.config import MinerConfig
from .model.database import Event
from .model.database import EventInstance
from .model.database import SequenceDatabase
from .model.hlh import EventColumns
from .model.hlh import Group
from .model.hlh import GroupEntry
from .model.hlh import HLH1
from .model.hlh import HLHk
from .model.hlh import Realizations
from .model.pattern import TemporalPattern
from .model.relation import Triple
from .model.result import LevelStats
from .model.result import MinedPattern
from .model.result import MiningResult
from .model.season import ResolvedSeasonConfig
from .model.support import SupportSet
from .relations import RELATION_ORDER
from .relations import classify_columns
from .relations import precedes_columns
from .seasonality import analyze
from .seasonality import is_candidate
from .seasonality import is_frequent_seasonal
from .seasonality import max_season

_LOGGER = logging.getLogger(__name__)

PairFilter = Callable[[Event, Event], bool]
Extension = Tuple[TemporalPattern, SupportSet, Optional[Realizations]]


def _passes(
    support: SupportSet, cfg: MinerConfig, thresholds: ResolvedSeasonConfig
) -> bool:
    if cfg.apriori:
        return is_candidate(support, thresholds)
    return len(support) > 0


def _thresholds(
    cfg: MinerConfig, n_granules: int, thresholds: Optional[ResolvedSeasonConfig]
) -> ResolvedSeasonConfig:
    return thresholds if thresholds is not None else cfg.season.resolve(n_granules)


def _frequent(
    patterns: Iterable[Tuple[TemporalPattern, SupportSet]],
    thresholds: ResolvedSeasonConfig,
) -> List[MinedPattern]:
    frequent = []
    for pattern, support in patterns:
        if len(support) < thresholds.candidate_size:
            continue
        positions = support.positions()
        if not is_frequent_seasonal(positions, thresholds):
            continue
        granules = tuple(positions.tolist())
        frequent.append(
            MinedPattern(
                pattern,
                granules,
                analyze(granules, thresholds),
                max_season(granules, thresholds.min_density),
            )
        )
    return frequent


def _gated(
    found: Mapping[TemporalPattern, Realizations],
    n_granules: int,
    cfg: MinerConfig,
    thresholds: ResolvedSeasonConfig,
    keep_tuples: bool,
) -> List[Extension]:
    extensions: List[Extension] = []
    for pattern in sorted(found, key=TemporalPattern.sort_key):
        realizations = found[pattern]
        support = realizations.support(n_granules)
        if _passes(support, cfg, thresholds):
            extensions.append(
                (pattern, support, realizations if keep_tuples else None)
            )
    return extensions


#
# Level 1
#
def mine_single_events(
    db: SequenceDatabase,
    cfg: MinerConfig,
    *,
    thresholds: Optional[ResolvedSeasonConfig] = None,
    series: Optional[Collection[str]] = None,
    stats: Optional[LevelStats] = None,
) -> Tuple[HLH1, List[MinedPattern]]:
    """Scan the sequence database once and keep the candidate single events.

    Args:
        db: The sequence database.
        cfg: Miner settings.
        thresholds: Optional; Resolved thresholds, resolved from cfg when omitted.
        series: Optional; Only mine the events of these series.
        stats: Optional; Level counts to fill.

    Returns:
        HLH1 holding every candidate event, and the frequent seasonal single events.
    """
    thresholds = _thresholds(cfg, len(db), thresholds)
    members: Dict[Event, List[EventInstance]] = {}
    for instances in db:
        for instance in instances:
            if series is None or instance.event.series in series:
                members.setdefault(instance.event, []).append(instance)

    hlh1 = HLH1(n_granules=len(db))
    for event in sorted(members):
        columns = EventColumns(event, members[event], db.factor_m, len(db))
        support = SupportSet.from_positions(columns.granules, len(db))
        if _passes(support, cfg, thresholds):
            hlh1.event_table[event] = support
            hlh1.granule_table[event] = columns

    frequent = _frequent(
        (
            (TemporalPattern.single(event), support)
            for event, support in hlh1.event_table.items()
        ),
        thresholds,
    )
    if stats is not None:
        stats.generated = len(members)
        stats.pruned = len(members) - len(hlh1.event_table)
        stats.patterns = len(hlh1.event_table)
        stats.frequent = len(frequent)
    return hlh1, frequent


#
# Candidate groups
#
def transitivity_filter(f1: Sequence[Event], prev: HLHk) -> List[Event]:
    """Keep the single events able to close a pattern of the next level.

    The last event of a k-pattern is also the last event of the (k-1)-pattern left
    after removing the event before it, so it must close some pattern of prev.

    Args:
        f1: Candidate single events.
        prev: The completed previous level.

    Returns:
        The filtered events, in input order.
    """
    closing = prev.last_events()
    return [event for event in f1 if event in closing]


def candidate_k_groups(
    f_prev: Mapping[Group, SupportSet],
    f1f: Mapping[Event, SupportSet],
    cfg: MinerConfig,
    *,
    thresholds: ResolvedSeasonConfig,
    admit_pair: Optional[PairFilter] = None,
    stats: Optional[LevelStats] = None,
) -> List[Tuple[Group, SupportSet]]:
    """Form the k-event groups and keep those passing the candidate gate.

    Args:
        f_prev: The (k-1)-event groups holding patterns, with their supports.
        f1f: The (filtered) single events, with their supports.
        cfg: Miner settings.
        thresholds: Resolved thresholds.
        admit_pair: Optional; For 2-event groups, a filter on the event pair.
        stats: Optional; Level counts to fill.

    Returns:
        The candidate groups (sorted event tuples) with their supports, sorted.
    """
    seen: Set[Group] = set()
    kept: List[Tuple[Group, SupportSet]] = []
    events = sorted(f1f)
    for group in sorted(f_prev):
        group_support = f_prev[group]
        for event in events:
            if event in group:
                continue
            new_group = tuple(sorted(group + (event,)))
            if new_group in seen:
                continue
            seen.add(new_group)
            if admit_pair is not None and len(new_group) == 2:
                if not admit_pair(new_group[0], new_group[1]):
                    continue
            support = group_support & f1f[event]
            if _passes(support, cfg, thresholds):
                kept.append((new_group, support))

    if stats is not None:
        stats.generated = len(seen)
        stats.pruned = len(seen) - len(kept)
    return sorted(kept, key=lambda item: item[0])


#
# Level 2
#
def _verify_pair(
    group: Group, support: SupportSet, hlh1: HLH1, cfg: MinerConfig
) -> Dict[TemporalPattern, Realizations]:
    columns_a = hlh1.granule_table[group[0]]
    columns_b = hlh1.granule_table[group[1]]
    rows_a = np.flatnonzero(support.mask()[columns_a.granules])
    left, rows_b = columns_b.join(columns_a.granules[rows_a])
    rows_a = rows_a[left]
    granules = columns_a.granules[rows_a]
    start_a, end_a = columns_a.starts[rows_a], columns_a.ends[rows_a]
    start_b, end_b = columns_b.starts[rows_b], columns_b.ends[rows_b]
    a_first = precedes_columns(
        start_a, end_a, group[0].series, start_b, end_b, group[1].series
    )
    codes = classify_columns(
        np.where(a_first, start_a, start_b),
        np.where(a_first, end_a, end_b),
        np.where(a_first, start_b, start_a),
        np.where(a_first, end_b, end_a),
        cfg.relation.epsilon,
        cfg.relation.min_overlap,
    )

    found: Dict[TemporalPattern, Realizations] = {}
    for order in (True, False):
        first, second = (columns_a, columns_b) if order else (columns_b, columns_a)
        for code, relation in enumerate(RELATION_ORDER):
            selected = (a_first == order) & (codes == code)
            if not selected.any():
                continue
            pairs = (rows_a[selected], rows_b[selected])
            pattern = TemporalPattern(
                (first.event, second.event), (Triple(relation, 0, 1),)
            )
            found[pattern] = Realizations(
                (first, second),
                granules[selected],
                np.column_stack(pairs if order else pairs[::-1]),
            )
    return found


def mine_2event_patterns(
    groups: Sequence[Tuple[Group, SupportSet]],
    hlh1: HLH1,
    cfg: MinerConfig,
    *,
    thresholds: ResolvedSeasonConfig,
    keep_tuples: bool = True,
    stats: Optional[LevelStats] = None,
) -> Tuple[HLHk, List[MinedPattern]]:
    """Verify the relations of every candidate event pair.

    Every instance pair of the two events in every granule of the group support is
    classified; a pattern's support is the set of granules with at least one
    realizing pair.

    Args:
        groups: Candidate 2-event groups from candidate_k_groups.
        hlh1: The single event level, holding the event instances.
        cfg: Miner settings.
        thresholds: Resolved thresholds.
        keep_tuples: Optional; Keep the realizing pairs for the next level.
        stats: Optional; Level counts to fill.

    Returns:
        HLH2 holding the candidate 2-event patterns, and the frequent seasonal ones.
    """
    hlh2 = HLHk(level=2)

    def verify(item: Tuple[Group, SupportSet]) -> List[Extension]:
        group, support = item
        found = _verify_pair(group, support, hlh1, cfg)
        return _gated(found, hlh1.n_granules, cfg, thresholds, keep_tuples)

    for (group, support), extensions in zip(
        groups, fan_out(verify, groups, cfg.threads)
    ):
        hlh2.group_table[group] = GroupEntry(support)
        for pattern, pattern_support, realizations in extensions:
            hlh2.add_pattern(group, pattern, pattern_support, realizations)

    frequent = _frequent(hlh2.pattern_table.items(), thresholds)
    if stats is not None:
        stats.patterns = len(hlh2.pattern_table)
        stats.frequent = len(frequent)
    return hlh2, frequent


#
# Levels k >= 3
#
def iterative_check(
    p_prev: TemporalPattern,
    e_k: Event,
    prev: HLHk,
    hlh2: HLHk,
    hlh1: HLH1,
    cfg: MinerConfig,
    *,
    thresholds: ResolvedSeasonConfig,
    keep_tuples: bool = True,
) -> List[Extension]:
    """Extend a candidate (k-1)-pattern with an event coming after all its events.

    The relations (r, E_i, e_k) are looked up in HLH2 from i = k-1 down to 1, the
    support being intersected at each step; the check stops at the first event with no
    candidate 2-pattern towards e_k or when the support falls below the gate. The
    stored instance tuples of p_prev are then extended in the remaining granules.

    Args:
        p_prev: A pattern of prev, stored with its instance tuples.
        e_k: The event to append.
        prev: The level holding p_prev and its instance tuples.
        hlh2: The 2-event level.
        hlh1: The single event level.
        cfg: Miner settings.
        thresholds: Resolved thresholds.
        keep_tuples: Optional; Return the realizing tuples for the next level.

    Returns:
        The candidate k-patterns (one per realized relation assignment) with their
        supports and realizing tuples, possibly none.
    """
    k = p_prev.size + 1
    support = prev.pattern_table[p_prev] & hlh1.event_table[e_k]
    allowed: List[List[int]] = [[] for _ in range(k - 1)]
    for i in reversed(range(k - 1)):
        union: Optional[SupportSet] = None
        for code, relation in enumerate(RELATION_ORDER):
            pair = TemporalPattern((p_prev.events[i], e_k), (Triple(relation, 0, 1),))
            pair_support = hlh2.pattern_table.get(pair)
            if pair_support is not None:
                allowed[i].append(code)
                union = pair_support if union is None else union | pair_support
        if union is None:
            return []
        support = support & union
        if not _passes(support, cfg, thresholds):
            return []

    stored = prev.granule_table[p_prev]
    columns = hlh1.granule_table[e_k]
    kept = np.flatnonzero(support.mask()[stored.granules])
    left, right = columns.join(stored.granules[kept])
    rows = stored.rows[kept[left]]
    granules = stored.granules[kept[left]]
    starts, ends = columns.starts[right], columns.ends[right]
    last = stored.columns[-1]
    valid = precedes_columns(
        last.starts[rows[:, -1]],
        last.ends[rows[:, -1]],
        last.event.series,
        starts,
        ends,
        e_k.series,
    )
    key = np.zeros(len(right), dtype=np.int64)
    for i, column in enumerate(stored.columns):
        codes = classify_columns(
            column.starts[rows[:, i]],
            column.ends[rows[:, i]],
            starts,
            ends,
            cfg.relation.epsilon,
            cfg.relation.min_overlap,
        )
        valid &= np.isin(codes, allowed[i])
        key = key * len(RELATION_ORDER) + codes

    found: Dict[TemporalPattern, Realizations] = {}
    for value in np.unique(key[valid]).tolist():
        selected = valid & (key == value)
        relations = []
        rest = value
        for _ in range(k - 1):
            rest, code = divmod(rest, len(RELATION_ORDER))
            relations.append(RELATION_ORDER[code])
        relations.reverse()
        pattern = p_prev.extend(e_k, relations)
        found[pattern] = Realizations(
            stored.columns + (columns,),
            granules[selected],
            np.column_stack((rows[selected], right[selected])),
        )
    return _gated(found, hlh1.n_granules, cfg, thresholds, keep_tuples)


def mine_k_event_patterns(
    prev: HLHk,
    hlh2: HLHk,
    hlh1: HLH1,
    cfg: MinerConfig,
    *,
    thresholds: ResolvedSeasonConfig,
    keep_tuples: bool = True,
    stats: Optional[LevelStats] = None,
) -> Tuple[HLHk, List[MinedPattern]]:
    """Mine level k = prev.level + 1 >= 3.

    Args:
        prev: The completed level k-1.
        hlh2: The 2-event level.
        hlh1: The single event level.
        cfg: Miner settings.
        thresholds: Resolved thresholds.
        keep_tuples: Optional; Keep the realizing tuples for the next level.
        stats: Optional; Level counts to fill.

    Returns:
        HLH_k holding the candidate k-event patterns, and the frequent seasonal ones.
    """
    f1 = hlh1.events()
    f1f = transitivity_filter(f1, prev) if cfg.transitivity else f1
    if cfg.transitivity:
        _LOGGER.debug(
            "Level %d: transitivity keeps %d of %d events",
            prev.level + 1,
            len(f1f),
            len(f1),
        )
    closing = set(f1f)
    f_prev = {
        group: prev.group_table[group].support for group in prev.productive_groups()
    }
    groups = candidate_k_groups(
        f_prev,
        {event: hlh1.event_table[event] for event in f1f},
        cfg,
        thresholds=thresholds,
        stats=stats,
    )

    hlhk = HLHk(level=prev.level + 1)

    def extend(item: Tuple[Group, SupportSet]) -> List[Extension]:
        group, _ = item
        extensions: List[Extension] = []
        for event in group:
            if event not in closing:
                continue
            sub_group = tuple(member for member in group if member != event)
            entry = prev.group_table.get(sub_group)
            if entry is None:
                continue
            for p_prev in entry.patterns:
                extensions.extend(
                    iterative_check(
                        p_prev,
                        event,
                        prev,
                        hlh2,
                        hlh1,
                        cfg,
                        thresholds=thresholds,
                        keep_tuples=keep_tuples,
                    )
                )
        return sorted(extensions, key=lambda extension: extension[0].sort_key())

    for (group, support), extensions in zip(
        groups, fan_out(extend, groups, cfg.threads)
    ):
        hlhk.group_table[group] = GroupEntry(support)
        for pattern, pattern_support, realizations in extensions:
            if pattern not in hlhk.pattern_table:
                hlhk.add_pattern(group, pattern, pattern_support, realizations)

    frequent = _frequent(hlhk.pattern_table.items(), thresholds)
    if stats is not None:
        stats.patterns = len(hlhk.pattern_table)
        stats.frequent = len(frequent)
    return hlhk, frequent


#
# Full run
#
def run_levels(
    db: SequenceDatabase,
    cfg: MinerConfig,
    mode: str,
    *,
    series: Optional[Collection[str]] = None,
    admit_pair: Optional[PairFilter] = None,
) -> MiningResult:
    """Mine every level up to k_max, optionally restricted (used by both miners).

    Args:
        db: The sequence database.
        cfg: Miner settings.
        mode: Label of the result.
        series: Optional; Only mine the events of these series.
        admit_pair: Optional; Filter on the event pairs of the 2-event groups.

    Returns:
        The frequent seasonal patterns in canonical order, with level counts.
    """
    thresholds = cfg.season.resolve(len(db))
    result = MiningResult(mode=mode, thresholds=thresholds, n_granules=len(db))

    started = time.perf_counter()
    stats = LevelStats(level=1)
    hlh1, frequent = mine_single_events(
        db, cfg, thresholds=thresholds, series=series, stats=stats
    )
    stats.seconds = time.perf_counter() - started
    result.levels.append(stats)
    result.patterns.extend(frequent)
    _log_level(stats)

    hlh2: Optional[HLHk] = None
    prev: Optional[HLHk] = None
    for level in range(2, cfg.max_pattern_size + 1):
        started = time.perf_counter()
        stats = LevelStats(level=level)
        keep_tuples = level < cfg.max_pattern_size
        if level == 2:
            groups = candidate_k_groups(
                {(event,): hlh1.event_table[event] for event in hlh1.events()},
                hlh1.event_table,
                cfg,
                thresholds=thresholds,
                admit_pair=admit_pair,
                stats=stats,
            )
            hlh2, frequent = mine_2event_patterns(
                groups,
                hlh1,
                cfg,
                thresholds=thresholds,
                keep_tuples=keep_tuples,
                stats=stats,
            )
            prev = hlh2
        elif prev is not None and hlh2 is not None:
            prev, frequent = mine_k_event_patterns(
                prev,
                hlh2,
                hlh1,
                cfg,
                thresholds=thresholds,
                keep_tuples=keep_tuples,
                stats=stats,
            )
        else:
            break
        stats.seconds = time.perf_counter() - started
        result.levels.append(stats)
        result.patterns.extend(frequent)
        _log_level(stats)
        if not prev.pattern_table:
            break

    result.patterns.sort(key=lambda mined: mined.pattern.sort_key())
    return result


def _log_level(stats: LevelStats) -> None:
    _LOGGER.info(
        "Level %d: generated=%d pruned=%d candidates=%d patterns=%d frequent=%d"
        " (%.3fs)",
        stats.level,
        stats.generated,
        stats.pruned,
        stats.candidates,
        stats.patterns,
        stats.frequent,
        stats.seconds,
    )


def mine(db: SequenceDatabase, cfg: MinerConfig) -> MiningResult:
    """Mine every frequent seasonal temporal pattern up to k_max events.

    Args:
        db: The sequence database.
        cfg: Miner settings.

    Returns:
        The frequent seasonal patterns in canonical order, with level counts.
    """
    return run_levels(db, cfg, MODE_EXACT)
