# coding: utf-8
"""Tests for stpm module. Temporal relations."""
from itertools import combinations
from itertools import groupby
from typing import Any
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

import numpy as np
import pytest
from hypothesis import assume
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from stpm.model.database import Event
from stpm.model.database import EventInstance
from stpm.model.database import SequenceDatabase
from stpm.model.database import instance_order
from stpm.model.pattern import TemporalPattern
from stpm.model.relation import RelationConfig
from stpm.model.relation import RelationKind
from stpm.model.relation import Triple
from stpm.relations import RELATION_ORDER
from stpm.relations import classify
from stpm.relations import classify_columns
from stpm.relations import classify_ordered
from stpm.relations import contains
from stpm.relations import follows
from stpm.relations import overlap
from stpm.relations import overlaps
from stpm.relations import precedes_columns
from stpm.relations import supports

DEFAULT = RelationConfig.of()


def instance(label: str, start: int, end: int) -> EventInstance:
    """Build an instance from a ``series:symbol`` label."""
    return EventInstance(Event.parse(label), start, end)


@pytest.mark.parametrize(
    "first, second, epsilon, min_overlap, expected",
    [
        (("A:1", 1, 2), ("B:1", 3, 4), 0, 1, RelationKind.FOLLOWS),
        (("A:1", 1, 4), ("B:1", 2, 3), 0, 1, RelationKind.CONTAINS),
        (("A:1", 1, 4), ("B:1", 1, 4), 0, 1, RelationKind.CONTAINS),
        (("A:1", 1, 3), ("B:1", 2, 5), 0, 1, RelationKind.OVERLAPS),
        (("A:1", 1, 3), ("B:1", 3, 5), 0, 2, None),
        (("A:1", 1, 3), ("B:1", 3, 5), 1, 3, RelationKind.FOLLOWS),
        (("A:1", 1, 4), ("B:1", 2, 5), 1, 3, RelationKind.CONTAINS),
        (("A:1", 1, 4), ("B:1", 2, 6), 1, 3, RelationKind.OVERLAPS),
    ],
)
def test_classify(
    first: Tuple[str, int, int],
    second: Tuple[str, int, int],
    epsilon: int,
    min_overlap: int,
    expected: Optional[RelationKind],
) -> None:
    """Test the relation of ordered instance pairs."""
    cfg = RelationConfig.of(epsilon, min_overlap)
    assert classify(instance(*first), instance(*second), cfg) == expected


def test_classify_unordered_pair() -> None:
    """Test an unordered pair is a contract violation."""
    with pytest.raises(ValueError):
        classify(instance("A:1", 3, 4), instance("B:1", 1, 2), DEFAULT)


def test_raw_predicates() -> None:
    """Test the predicates on their boundaries."""
    cfg = RelationConfig.of(1, 3)
    first = instance("A:1", 1, 4)

    assert overlap(first, instance("B:1", 4, 6)) == 1
    assert follows(first, instance("B:1", 4, 6), cfg)
    assert not follows(first, instance("B:1", 3, 6), cfg)
    assert contains(first, instance("B:1", 2, 5), cfg)
    assert not contains(first, instance("B:1", 2, 6), cfg)
    assert overlaps(first, instance("B:1", 2, 6), cfg)
    assert not overlaps(first, instance("B:1", 3, 6), RelationConfig.of(0, 3))


@st.composite
def instance_pairs(draw: Any) -> Tuple[EventInstance, EventInstance]:
    """Draw two instances over the first 30 fine granules."""
    bounds = []
    for _ in range(2):
        start = draw(st.integers(min_value=1, max_value=30))
        bounds.append((start, draw(st.integers(min_value=start, max_value=30))))
    return instance("A:1", *bounds[0]), instance("B:1", *bounds[1])


@settings(max_examples=500, deadline=None)
@given(
    instance_pairs(),
    st.integers(min_value=0, max_value=3),
    st.integers(min_value=0, max_value=5),
)
def test_predicates_exclusive(
    pair: Tuple[EventInstance, EventInstance], epsilon: int, extra: int
) -> None:
    """Test no pair satisfies two predicates when d_o > 2 epsilon."""
    cfg = RelationConfig.of(epsilon, 2 * epsilon + 1 + extra)
    e_i, e_j = pair
    holding = [follows(e_i, e_j, cfg), contains(e_i, e_j, cfg), overlaps(e_i, e_j, cfg)]

    assert sum(holding) <= 1


def test_classify_exclusive_and_total() -> None:
    """Test exclusivity and totality over many random pairs."""
    rng = np.random.default_rng(7)
    for _ in range(100_000):
        starts = rng.integers(1, 20, size=2)
        ends = starts + rng.integers(0, 6, size=2)
        e_i, e_j = sorted(
            (
                instance("A:1", int(starts[0]), int(ends[0])),
                instance("B:1", int(starts[1]), int(ends[1])),
            ),
            key=instance_order,
        )
        assert classify(e_i, e_j, DEFAULT) is not None
        assert (
            follows(e_i, e_j, DEFAULT)
            + contains(e_i, e_j, DEFAULT)
            + overlaps(e_i, e_j, DEFAULT)
            == 1
        )


def test_supports_three_event_pattern(worked_db: SequenceDatabase) -> None:
    """Test a granule supports a 3-event pattern through one assignment."""
    pattern = TemporalPattern(
        (Event("C", "1"), Event("D", "1"), Event("C", "0")),
        (
            Triple(RelationKind.CONTAINS, 0, 1),
            Triple(RelationKind.FOLLOWS, 0, 2),
            Triple(RelationKind.FOLLOWS, 1, 2),
        ),
    )
    found = supports(worked_db.granule(1), pattern, DEFAULT)

    assert found is not None
    assert [str(item) for item in found] == ["C:1[1,2]", "D:1[1,1]", "C:0[3,3]"]
    assert supports(worked_db.granule(7), pattern, DEFAULT) is None


def test_supports_two_event_patterns(worked_db: SequenceDatabase) -> None:
    """Test support depends on which instance comes first."""
    m1_n1 = TemporalPattern(
        (Event("M", "1"), Event("N", "1")), (Triple(RelationKind.CONTAINS, 0, 1),)
    )
    n1_m1 = TemporalPattern(
        (Event("N", "1"), Event("M", "1")), (Triple(RelationKind.CONTAINS, 0, 1),)
    )

    assert supports(worked_db.granule(1), m1_n1, DEFAULT) is not None
    assert supports(worked_db.granule(7), m1_n1, DEFAULT) is None
    assert supports(worked_db.granule(2), m1_n1, DEFAULT) is None
    assert supports(worked_db.granule(2), n1_m1, DEFAULT) is not None


def test_supports_short_granule() -> None:
    """Test a granule with one instance supports no pattern."""
    pattern = TemporalPattern(
        (Event("A", "1"), Event("B", "1")), (Triple(RelationKind.FOLLOWS, 0, 1),)
    )

    assert supports([instance("A:1", 1, 1)], pattern, DEFAULT) is None


@settings(max_examples=200, deadline=None)
@given(
    st.lists(instance_pairs(), min_size=1, max_size=30),
    st.integers(min_value=0, max_value=3),
    st.integers(min_value=1, max_value=6),
)
def test_classify_columns_matches_classify(
    pairs: List[Tuple[EventInstance, EventInstance]], epsilon: int, min_overlap: int
) -> None:
    """Test the column-wise classification and ordering agree with the pairwise one."""
    a_start = np.array([a.start for a, _ in pairs])
    a_end = np.array([a.end for a, _ in pairs])
    b_start = np.array([b.start for _, b in pairs])
    b_end = np.array([b.end for _, b in pairs])
    a_first = precedes_columns(a_start, a_end, "A", b_start, b_end, "B")

    assert list(a_first) == [
        instance_order(a) < instance_order(b) for a, b in pairs
    ]

    ordered = [(a, b) if first else (b, a) for (a, b), first in zip(pairs, a_first)]
    codes = classify_columns(
        np.array([first.start for first, _ in ordered]),
        np.array([first.end for first, _ in ordered]),
        np.array([second.start for _, second in ordered]),
        np.array([second.end for _, second in ordered]),
        epsilon,
        min_overlap,
    )
    for code, (first, second) in zip(codes.tolist(), ordered):
        expected = classify_ordered(first, second, epsilon, min_overlap)
        assert (RELATION_ORDER[code] if code >= 0 else None) == expected


@st.composite
def granule_instances(draw: Any) -> List[EventInstance]:
    """Draw the instances of one granule of 8 fine granules over 2 to 4 series."""
    instances = []
    for series in "ABCD"[: draw(st.integers(min_value=2, max_value=4))]:
        symbols = draw(st.lists(st.sampled_from("01"), min_size=8, max_size=8))
        start = 1
        for symbol, run in groupby(symbols):
            length = len(list(run))
            instances.append(instance(f"{series}:{symbol}", start, start + length - 1))
            start += length
    return sorted(instances, key=instance_order)


def realized_pattern(chosen: Sequence[EventInstance]) -> TemporalPattern:
    """Build the pattern realized by instances in canonical order."""
    triples = []
    for i, j in combinations(range(len(chosen)), 2):
        relation = classify(chosen[i], chosen[j], DEFAULT)
        assert relation is not None
        triples.append(Triple(relation, i, j))
    return TemporalPattern(tuple(item.event for item in chosen), tuple(triples))


def restricted(pattern: TemporalPattern, keep: Sequence[int]) -> TemporalPattern:
    """Restrict a pattern to some of its events, given by ascending indices."""
    index = {old: new for new, old in enumerate(keep)}
    return TemporalPattern(
        tuple(pattern.events[i] for i in keep),
        tuple(
            Triple(triple.relation, index[triple.left], index[triple.right])
            for triple in pattern.triples
            if triple.left in index and triple.right in index
        ),
    )


@settings(max_examples=200, deadline=None)
@given(granule_instances(), st.data())
def test_supports_monotone_under_sub_patterns(
    granule: List[EventInstance], data: Any
) -> None:
    """Test a granule supporting a pattern supports each restriction of it."""
    picked = data.draw(
        st.lists(
            st.integers(min_value=0, max_value=len(granule) - 1),
            min_size=2,
            max_size=4,
            unique=True,
        ).map(sorted)
    )
    chosen = [granule[index] for index in picked]
    assume(len({item.event for item in chosen}) == len(chosen))
    pattern = realized_pattern(chosen)

    assert supports(granule, pattern, DEFAULT) is not None
    for size in range(2, pattern.size):
        for keep in combinations(range(pattern.size), size):
            assert supports(granule, restricted(pattern, keep), DEFAULT) is not None
