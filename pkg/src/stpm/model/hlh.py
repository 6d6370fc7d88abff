# -*- coding: utf-8 -*-
"""Hierarchical lookup hash structures of the exact miner.

Event instances are kept column-wise, one set of parallel arrays per event, and the
instance tuples realizing a pattern are rows of indices into those columns. Joining
them per granule is then a handful of vectorized operations.
"""
from dataclasses import dataclass
from dataclasses import field
from typing import Dict
from typing import List
from typing import Optional
from typing import Sequence
from typing import Set
from typing import Tuple

import numpy as np

from .database import Event
from .database import EventInstance
from .pattern import TemporalPattern
from .support import SupportSet

Group = Tuple[Event, ...]
InstanceTuple = Tuple[EventInstance, ...]


class EventColumns:
    """The instances of one event, in granule then canonical order.

    Attributes:
        event: The event.
        members: The instances.
        granules: Coarse granule of every instance.
        starts: First fine position of every instance.
        ends: Last fine position of every instance.
        counts: Number of instances per granule position (entry 0 unused).
        first: Index in members of the first instance of every granule.
    """

    def __init__(
        self,
        event: Event,
        members: Sequence[EventInstance],
        factor_m: int,
        n_granules: int,
    ) -> None:
        """Initialize an EventColumns object.

        Args:
            event: The event.
            members: Its instances, in granule then canonical order.
            factor_m: Number of fine granules per coarse granule.
            n_granules: Number N of coarse granules.
        """
        size = len(members)
        self.event = event
        self.members: Tuple[EventInstance, ...] = tuple(members)
        self.starts = np.fromiter((m.start for m in members), np.int64, count=size)
        self.ends = np.fromiter((m.end for m in members), np.int64, count=size)
        self.granules = (self.starts - 1) // factor_m + 1
        self.counts = np.bincount(self.granules, minlength=n_granules + 1)
        self.first = np.cumsum(self.counts) - self.counts

    def in_granule(self, granule: int) -> Tuple[EventInstance, ...]:
        """Return the instances of the event in a granule."""
        if not 0 < granule < len(self.counts):
            return ()
        begin = int(self.first[granule])
        return self.members[begin : begin + int(self.counts[granule])]

    def join(self, granules: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Pair every entry of granules with every instance of the same granule.

        Args:
            granules: Granule positions, in ascending order.

        Returns:
            Two index arrays of equal length, into granules and into the instances.
            Pairs come grouped by entry, instances in canonical order.
        """
        repeats = self.counts[granules]
        left = np.repeat(np.arange(len(granules)), repeats)
        offsets = np.repeat(np.cumsum(repeats) - repeats, repeats)
        right = np.repeat(self.first[granules], repeats) + np.arange(len(left))
        return left, right - offsets


class Realizations:
    """The instance tuples realizing one pattern.

    Row r holds, for every event j of the pattern, the index of its instance in
    columns[j]. Rows come in ascending granule order.

    Attributes:
        columns: The instance columns of the pattern events.
        granules: The granule of every row.
        rows: Index matrix with one column per pattern event.
    """

    def __init__(
        self,
        columns: Tuple[EventColumns, ...],
        granules: np.ndarray,
        rows: np.ndarray,
    ) -> None:
        """Initialize a Realizations object."""
        self.columns = columns
        self.granules = granules
        self.rows = rows

    def __len__(self) -> int:
        """Return the number of realizing tuples."""
        return len(self.granules)

    def support(self, n_granules: int) -> SupportSet:
        """Return the granules holding at least one realizing tuple."""
        return SupportSet.from_positions(self.granules, n_granules)

    def positions(self) -> List[int]:
        """Return the distinct granules of the rows, ascending."""
        return [int(position) for position in np.unique(self.granules)]

    def tuples(self, granule: int) -> Tuple[InstanceTuple, ...]:
        """Return the instance tuples realizing the pattern in a granule."""
        begin, end = np.searchsorted(self.granules, [granule, granule + 1])
        return tuple(
            tuple(column.members[index] for column, index in zip(self.columns, row))
            for row in self.rows[begin:end].tolist()
        )


@dataclass
class HLH1:
    """Single event level.

    Attributes:
        n_granules: Number N of coarse granules.
        event_table: Candidate event to its support set (EH).
        granule_table: Candidate event to its instances per granule (GH).
    """

    n_granules: int = 0
    event_table: Dict[Event, SupportSet] = field(default_factory=dict)
    granule_table: Dict[Event, EventColumns] = field(default_factory=dict)

    def events(self) -> List[Event]:
        """Return the candidate events, sorted."""
        return sorted(self.event_table)

    def instances(self, event: Event, granule: int) -> Tuple[EventInstance, ...]:
        """Return the instances of an event in a granule."""
        columns = self.granule_table.get(event)
        return columns.in_granule(granule) if columns is not None else ()


@dataclass
class GroupEntry:
    """Support of a k-event group and the candidate patterns mined from it."""

    support: SupportSet
    patterns: List[TemporalPattern] = field(default_factory=list)


@dataclass
class HLHk:
    """Level k >= 2.

    Realizing tuples are only kept when the next level is to be mined.

    Attributes:
        level: The pattern size k.
        group_table: Sorted event group to its support and candidate patterns (EH_k).
        pattern_table: Candidate pattern to its support set (PH_k).
        granule_table: Candidate pattern to its realizing instance tuples (GH_k).
    """

    level: int
    group_table: Dict[Group, GroupEntry] = field(default_factory=dict)
    pattern_table: Dict[TemporalPattern, SupportSet] = field(default_factory=dict)
    granule_table: Dict[TemporalPattern, Realizations] = field(default_factory=dict)

    def add_pattern(
        self,
        group: Group,
        pattern: TemporalPattern,
        support: SupportSet,
        realizations: Optional[Realizations],
    ) -> None:
        """Store a candidate pattern, its support and its realizing tuples.

        Args:
            group: The sorted event group the pattern belongs to.
            pattern: The candidate pattern.
            support: Its support set.
            realizations: The instance tuples realizing it, or None to skip them.
        """
        self.group_table[group].patterns.append(pattern)
        self.pattern_table[pattern] = support
        if realizations is not None:
            self.granule_table[pattern] = realizations

    def tuples(
        self, pattern: TemporalPattern, granule: int
    ) -> Tuple[InstanceTuple, ...]:
        """Return the instance tuples realizing a pattern in a granule."""
        realizations = self.granule_table.get(pattern)
        return realizations.tuples(granule) if realizations is not None else ()

    def last_events(self) -> Set[Event]:
        """Return the events that close at least one stored pattern."""
        return {pattern.events[-1] for pattern in self.pattern_table}

    def productive_groups(self) -> List[Group]:
        """Return the groups holding at least one pattern, sorted."""
        return sorted(
            group for group, entry in self.group_table.items() if entry.patterns
        )
