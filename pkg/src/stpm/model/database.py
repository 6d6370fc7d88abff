# -*- coding: utf-8 -*-
"""Temporal sequence database model."""
from typing import Iterator
from typing import List
from typing import NamedTuple
from typing import Sequence
from typing import Set
from typing import Tuple

from stpm.exceptions import StpmDataError


class Event(NamedTuple):
    """A temporal event: one symbol of one series, printed as ``series:symbol``."""

    series: str
    symbol: str

    def __str__(self) -> str:
        """Return the ``series:symbol`` form."""
        return f"{self.series}:{self.symbol}"

    @classmethod
    def parse(cls, text: str) -> "Event":
        """Parse the ``series:symbol`` form.

        Args:
            text: An event label such as ``"C:1"``.

        Returns:
            The event.

        Raises:
            StpmDataError: The label has no ``:`` separator.
        """
        series, sep, symbol = text.rpartition(":")
        if not sep or not series:
            raise StpmDataError(f"Invalid event label {text!r}")
        return cls(series, symbol)


class EventInstance(NamedTuple):
    """One occurrence of an event over inclusive fine granule positions."""

    event: Event
    start: int
    end: int

    def __str__(self) -> str:
        """Return the ``C:1[1,2]`` form."""
        return f"{self.event}[{self.start},{self.end}]"


def instance_order(instance: EventInstance) -> Tuple[int, int, str]:
    """Sort key of instances: start ascending, end descending, series ascending."""
    return instance.start, -instance.end, instance.event.series


class SequenceDatabase:
    """Per coarse granule lists of event instances.

    Granules are addressed by their 1-based position. Instances of a granule are kept
    in canonical order (see `instance_order`).
    """

    def __init__(
        self, granules: Sequence[Sequence[EventInstance]], factor_m: int
    ) -> None:
        """Initialize a SequenceDatabase object.

        Args:
            granules: Instances of every coarse granule, granule 1 first.
            factor_m: Number of fine granules per coarse granule.

        Raises:
            StpmDataError: An instance lies outside its coarse granule.
        """
        self.factor_m = factor_m
        self._granules: Tuple[Tuple[EventInstance, ...], ...] = tuple(
            tuple(sorted(instances, key=instance_order)) for instances in granules
        )
        for position, instances in enumerate(self._granules, start=1):
            low, high = (position - 1) * factor_m + 1, position * factor_m
            for instance in instances:
                if not low <= instance.start <= instance.end <= high:
                    raise StpmDataError(
                        f"Instance {instance} outside granule [{low},{high}]",
                        line=position,
                    )

    def granule(self, position: int) -> Tuple[EventInstance, ...]:
        """Return the instances of a coarse granule (1-based position)."""
        return self._granules[position - 1]

    def positions(self) -> range:
        """Return the 1-based granule positions."""
        return range(1, len(self._granules) + 1)

    def events(self) -> List[Event]:
        """Return the distinct events of the database, sorted."""
        found: Set[Event] = set()
        for instances in self._granules:
            found.update(instance.event for instance in instances)
        return sorted(found)

    def __iter__(self) -> Iterator[Tuple[EventInstance, ...]]:
        """Iterate over the granules in position order."""
        return iter(self._granules)

    def __len__(self) -> int:
        """Return the number N of coarse granules."""
        return len(self._granules)
