# -*- coding: utf-8 -*-
"""Temporal relations between event instances.

An instance over fine granules [s, e] covers the time span (s - 1, e], so two
ordered instances i, j overlap by ``e_i - s_j + 1`` granules (zero or less when j
starts after i ends).
"""
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

import numpy as np

from .model.database import EventInstance
from .model.database import instance_order
from .model.pattern import TemporalPattern
from .model.relation import RelationConfig
from .model.relation import RelationKind

# relation of every code returned by classify_columns
RELATION_ORDER: Tuple[RelationKind, ...] = tuple(RelationKind)


def overlap(e_i: EventInstance, e_j: EventInstance) -> int:
    """Return the number of granules e_j starts before e_i ends."""
    return e_i.end - e_j.start + 1


def follows(e_i: EventInstance, e_j: EventInstance, cfg: RelationConfig) -> bool:
    """Return True if e_j starts after e_i ends, up to epsilon granules of overlap."""
    return overlap(e_i, e_j) <= cfg.epsilon


def contains(e_i: EventInstance, e_j: EventInstance, cfg: RelationConfig) -> bool:
    """Return True if e_i covers e_j, e_j ending at most epsilon after e_i."""
    return (
        e_i.start <= e_j.start
        and e_j.end <= e_i.end + cfg.epsilon
        and overlap(e_i, e_j) > cfg.epsilon
    )


def overlaps(e_i: EventInstance, e_j: EventInstance, cfg: RelationConfig) -> bool:
    """Return True if e_j starts inside e_i and ends after it, overlapping enough."""
    return (
        e_i.start < e_j.start
        and e_j.end > e_i.end + cfg.epsilon
        and overlap(e_i, e_j) >= cfg.min_overlap - cfg.epsilon
    )


def is_ordered(e_i: EventInstance, e_j: EventInstance) -> bool:
    """Return True if e_i precedes e_j in canonical instance order."""
    return instance_order(e_i) < instance_order(e_j)


def classify(
    e_i: EventInstance, e_j: EventInstance, cfg: RelationConfig
) -> Optional[RelationKind]:
    """Classify an ordered instance pair.

    Predicates are tested in the order Follows, Contains, Overlaps and the first one
    that holds is returned.

    Args:
        e_i: The earlier instance.
        e_j: The later instance.
        cfg: Tolerance buffer and minimal overlap.

    Returns:
        The relation, or None when the instances overlap by less than the minimal
        overlap.

    Raises:
        ValueError: e_i does not precede e_j in canonical instance order.
    """
    if not is_ordered(e_i, e_j):
        raise ValueError(f"Unordered instance pair {e_i}, {e_j}")
    return classify_ordered(e_i, e_j, cfg.epsilon, cfg.min_overlap)


def classify_ordered(
    e_i: EventInstance, e_j: EventInstance, epsilon: int, min_overlap: int
) -> Optional[RelationKind]:
    """Classify a pair known to be ordered (inner loop form of classify)."""
    shared = e_i.end - e_j.start + 1
    if shared <= epsilon:
        return RelationKind.FOLLOWS
    if e_j.end <= e_i.end + epsilon:
        if e_i.start <= e_j.start:
            return RelationKind.CONTAINS
        return None
    if e_i.start < e_j.start and shared >= min_overlap - epsilon:
        return RelationKind.OVERLAPS
    return None


def supports(
    seq: Sequence[EventInstance], pattern: TemporalPattern, cfg: RelationConfig
) -> Optional[Tuple[EventInstance, ...]]:
    """Search a granule's instances for an assignment realizing a pattern.

    Pattern events are assigned to distinct instances taken in canonical order, and
    every triple's relation must hold between the assigned instances.

    Args:
        seq: Instances of one granule, in canonical order.
        pattern: The pattern to look for.
        cfg: Tolerance buffer and minimal overlap.

    Returns:
        The realizing instances (one per pattern event) or None when the granule does
        not support the pattern.
    """
    if len(seq) < 2:
        return None
    ordered = sorted(seq, key=instance_order)
    k = pattern.size
    chosen: List[EventInstance] = []

    def search(start: int) -> bool:
        depth = len(chosen)
        if depth == k:
            return True
        event = pattern.events[depth]
        for index in range(start, len(ordered)):
            candidate = ordered[index]
            if candidate.event != event:
                continue
            if all(
                classify_ordered(chosen[i], candidate, cfg.epsilon, cfg.min_overlap)
                == pattern.relation(i, depth)
                for i in range(depth)
            ):
                chosen.append(candidate)
                if search(index + 1):
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if search(0) else None


def classify_columns(
    first_start: np.ndarray,
    first_end: np.ndarray,
    second_start: np.ndarray,
    second_end: np.ndarray,
    epsilon: int,
    min_overlap: int,
) -> np.ndarray:
    """Classify ordered instance pairs given as parallel arrays.

    Args:
        first_start: Start of the earlier instance of every pair.
        first_end: End of the earlier instance of every pair.
        second_start: Start of the later instance of every pair.
        second_end: End of the later instance of every pair.
        epsilon: Tolerance buffer.
        min_overlap: Minimal overlap duration.

    Returns:
        For every pair the index of its relation in RELATION_ORDER, or -1 where
        classify_ordered returns None.
    """
    shared = first_end - second_start + 1
    follows = shared <= epsilon
    within = second_end <= first_end + epsilon
    codes = np.full(len(shared), -1, dtype=np.int64)
    codes[~follows & within & (first_start <= second_start)] = RELATION_ORDER.index(
        RelationKind.CONTAINS
    )
    codes[
        ~follows
        & ~within
        & (first_start < second_start)
        & (shared >= min_overlap - epsilon)
    ] = RELATION_ORDER.index(RelationKind.OVERLAPS)
    codes[follows] = RELATION_ORDER.index(RelationKind.FOLLOWS)
    return codes


def precedes_columns(
    first_start: np.ndarray,
    first_end: np.ndarray,
    first_series: str,
    second_start: np.ndarray,
    second_end: np.ndarray,
    second_series: str,
) -> np.ndarray:
    """Compare instances of two events pairwise in canonical instance order.

    Returns:
        True where the instance of the first event precedes the one of the second.
    """
    same_start = first_start == second_start
    return (first_start < second_start) | (
        same_start
        & (
            (first_end > second_end)
            | ((first_end == second_end) & (first_series < second_series))
        )
    )
