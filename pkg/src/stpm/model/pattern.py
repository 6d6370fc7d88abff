# -*- coding: utf-8 -*-
"""Temporal pattern model."""
from dataclasses import dataclass
from typing import Any
from typing import List
from typing import Sequence
from typing import Tuple
from typing import TypedDict

from .database import Event
from .relation import RelationKind
from .relation import Triple


class PatternKeyData(TypedDict):
    """Describing the JSON form of a pattern key.

    Triples use 1-based event indices.
    """

    events: List[str]
    triples: List[List[Any]]


@dataclass(frozen=True)
class TemporalPattern:
    """Ordered events plus one relation for every pair of them.

    Events are ordered as the instances realizing the pattern are (start ascending,
    end descending, series ascending), and triples are sorted by (left, right). Two
    patterns are equal when events and triples are.

    Attributes:
        events: The k distinct events.
        triples: The k(k-1)/2 relations, one per pair of event indices.
    """

    events: Tuple[Event, ...]
    triples: Tuple[Triple, ...] = ()

    def __post_init__(self) -> None:
        """Check the pattern is in canonical form."""
        k = len(self.events)
        if k == 0:
            raise ValueError("A pattern needs at least one event")
        if len(set(self.events)) != k:
            raise ValueError(f"Duplicated event in pattern {self.events}")
        expected = [(i, j) for i in range(k) for j in range(i + 1, k)]
        if [(t.left, t.right) for t in self.triples] != expected:
            raise ValueError(f"Triples do not cover every pair once: {self.triples}")

    @classmethod
    def single(cls, event: Event) -> "TemporalPattern":
        """Build the 1-event pattern of an event."""
        return cls((event,))

    @property
    def size(self) -> int:
        """Return the number k of events."""
        return len(self.events)

    def relation(self, left: int, right: int) -> RelationKind:
        """Return the relation between two event indices (left < right)."""
        return self.triples[self._triple_index(left, right)].relation

    def _triple_index(self, left: int, right: int) -> int:
        k = self.size
        return left * k - left * (left + 1) // 2 + (right - left - 1)

    def extend(
        self, event: Event, relations: Sequence[RelationKind]
    ) -> "TemporalPattern":
        """Append an event that comes after every event of the pattern.

        Args:
            event: The new last event.
            relations: relations[i] holds between events[i] and the new event.

        Returns:
            The (k+1)-event pattern.
        """
        k = self.size
        triples = [
            Triple(self.relation(i, j), i, j) for i in range(k) for j in range(i + 1, k)
        ]
        triples.extend(Triple(relations[i], i, k) for i in range(k))
        return TemporalPattern(
            self.events + (event,),
            tuple(sorted(triples, key=lambda triple: (triple.left, triple.right))),
        )

    def sort_key(self) -> Tuple[int, Tuple[str, ...], Tuple[Tuple[int, int, str], ...]]:
        """Return the canonical output order key (size, events, triples)."""
        return (
            self.size,
            tuple(str(event) for event in self.events),
            tuple((t.left, t.right, t.relation.value) for t in self.triples),
        )

    def to_data(self) -> PatternKeyData:
        """Return the JSON form of the pattern key."""
        return {
            "events": [str(event) for event in self.events],
            "triples": [
                [triple.relation.value, triple.left + 1, triple.right + 1]
                for triple in self.triples
            ],
        }

    @classmethod
    def from_data(cls, data: PatternKeyData) -> "TemporalPattern":
        """Build a pattern from its JSON form."""
        return cls(
            tuple(Event.parse(label) for label in data["events"]),
            tuple(
                Triple(RelationKind(kind), int(left) - 1, int(right) - 1)
                for kind, left, right in data["triples"]
            ),
        )

    def __str__(self) -> str:
        """Return a readable form, e.g. ``C:1 ≽ D:1``."""
        if self.size == 1:
            return str(self.events[0])
        if self.size == 2:
            triple = self.triples[0]
            return f"{self.events[0]} {triple.relation.arrow} {self.events[1]}"
        return (
            "<"
            + ", ".join(
                f"({t.relation.value}, {self.events[t.left]}, {self.events[t.right]})"
                for t in self.triples
            )
            + ">"
        )
