# coding: utf-8
"""Tests for stpm module. Model classes."""
import json
from pathlib import Path
from typing import Any
from typing import Dict

import pytest

from .const import WORKED_SEASON
from stpm.const import SCHEMA_VERSION
from stpm.exceptions import StpmConfigError
from stpm.exceptions import StpmDataError
from stpm.miner import mine
from stpm.model.config import MinerConfig
from stpm.model.config import RunConfig
from stpm.model.database import Event
from stpm.model.database import EventInstance
from stpm.model.database import SequenceDatabase
from stpm.model.granularity import GranularitySpec
from stpm.model.graph import CorrelationGraph
from stpm.model.pattern import TemporalPattern
from stpm.model.relation import RelationConfig
from stpm.model.relation import RelationKind
from stpm.model.relation import Triple
from stpm.model.result import MiningResult
from stpm.model.result import accuracy

C1_D1_C0 = TemporalPattern(
    (Event("C", "1"), Event("D", "1"), Event("C", "0")),
    (
        Triple(RelationKind.CONTAINS, 0, 1),
        Triple(RelationKind.FOLLOWS, 0, 2),
        Triple(RelationKind.FOLLOWS, 1, 2),
    ),
)


def test_event() -> None:
    """Test event labels."""
    assert str(Event("C", "1")) == "C:1"
    assert Event.parse("C:1") == Event("C", "1")
    assert Event.parse("site:a:high") == Event("site:a", "high")
    with pytest.raises(StpmDataError):
        Event.parse("C1")
    assert str(EventInstance(Event("C", "1"), 1, 2)) == "C:1[1,2]"


def test_sequence_database() -> None:
    """Test granule access and the instance bounds check."""
    db = SequenceDatabase(
        [
            [
                EventInstance(Event("A", "1"), 2, 3),
                EventInstance(Event("B", "0"), 1, 3),
            ],
            [EventInstance(Event("A", "0"), 4, 6)],
        ],
        3,
    )

    assert len(db) == 2
    assert list(db.positions()) == [1, 2]
    assert [str(i) for i in db.granule(1)] == ["B:0[1,3]", "A:1[2,3]"]
    assert db.events() == [Event("A", "0"), Event("A", "1"), Event("B", "0")]
    with pytest.raises(StpmDataError):
        SequenceDatabase([[EventInstance(Event("A", "1"), 3, 4)]], 3)


def test_granularity() -> None:
    """Test the fine span of coarse granules."""
    spec = GranularitySpec.of(24, "hour")

    assert spec.fine_unit_label == "hour"
    assert spec.coarse_count(100) == 4
    assert spec.fine_span(2) == (25, 48)
    with pytest.raises(StpmConfigError):
        GranularitySpec.of(0)


def test_temporal_pattern() -> None:
    """Test pattern accessors and text forms."""
    assert C1_D1_C0.size == 3
    assert C1_D1_C0.relation(0, 1) == RelationKind.CONTAINS
    assert C1_D1_C0.relation(1, 2) == RelationKind.FOLLOWS
    assert str(C1_D1_C0.events[0]) == "C:1"
    assert str(TemporalPattern.single(Event("C", "1"))) == "C:1"
    assert C1_D1_C0.to_data() == {
        "events": ["C:1", "D:1", "C:0"],
        "triples": [["Contains", 1, 2], ["Follows", 1, 3], ["Follows", 2, 3]],
    }
    assert TemporalPattern.from_data(C1_D1_C0.to_data()) == C1_D1_C0


def test_temporal_pattern_extend() -> None:
    """Test appending an event keeps the triples sorted by index pair."""
    pair = TemporalPattern(
        (Event("C", "1"), Event("D", "1")), (Triple(RelationKind.CONTAINS, 0, 1),)
    )
    extended = pair.extend(Event("C", "0"), [RelationKind.FOLLOWS] * 2)

    assert extended == C1_D1_C0
    assert str(pair) == "C:1 ≽ D:1"


@pytest.mark.parametrize(
    "events, triples",
    [
        ((), ()),
        ((Event("A", "1"), Event("A", "1")), (Triple(RelationKind.FOLLOWS, 0, 1),)),
        ((Event("A", "1"), Event("B", "1")), ()),
        (
            (Event("A", "1"), Event("B", "1")),
            (Triple(RelationKind.FOLLOWS, 1, 0),),
        ),
    ],
)
def test_temporal_pattern_invalid(events: Any, triples: Any) -> None:
    """Test patterns not in canonical form are refused."""
    with pytest.raises(ValueError):
        TemporalPattern(events, triples)


@pytest.mark.parametrize("epsilon, min_overlap", [(-1, 1), (0, 0), (1, 2)])
def test_relation_config_invalid(epsilon: int, min_overlap: int) -> None:
    """Test min_overlap must exceed twice the tolerance buffer."""
    with pytest.raises(StpmConfigError):
        RelationConfig.of(epsilon, min_overlap)


def test_miner_config_invalid() -> None:
    """Test pattern size and threads must be positive."""
    cfg = RunConfig({"input": "x.csv", "season": WORKED_SEASON}).miner
    with pytest.raises(StpmConfigError):
        MinerConfig(season=cfg.season, relation=cfg.relation, max_pattern_size=0)
    with pytest.raises(StpmConfigError):
        MinerConfig(season=cfg.season, relation=cfg.relation, threads=0)


def test_run_config_defaults() -> None:
    """Test unset fields take their defaults."""
    config = RunConfig({"input": "data.csv", "season": WORKED_SEASON})

    assert config.input == Path("data.csv")
    assert config.mode == "exact"
    assert config.granularity.factor_m == 1
    assert config.miner.max_pattern_size == 3
    assert config.miner.apriori and config.miner.transitivity
    assert config.miner.relation.epsilon == 0
    assert config.symbols["default"]["thresholds"] == [0.5]
    assert config.output is None
    assert config.timezone == "UTC"


def test_run_config_merge() -> None:
    """Test nested settings are merged with the defaults."""
    config = RunConfig(
        {
            "input": "data.csv",
            "season": WORKED_SEASON,
            "factor_m": 3,
            "mode": "approx",
            "pruning": {"apriori": False},  # type: ignore[typeddict-item]
            "output": "out/patterns.json",
        }
    )

    assert config.mode == "approx"
    assert not config.miner.apriori
    assert config.miner.transitivity
    assert config.output == Path("out/patterns.json")
    assert config.echo() == {
        "input": "data.csv",
        "factor_m": 3,
        "mode": "approx",
        "max_pattern_size": 3,
        "season": dict(WORKED_SEASON),
        "relation": {"epsilon": 0, "min_overlap": 1},
        "pruning": {"apriori": False, "transitivity": True},
    }


@pytest.mark.parametrize(
    "raw",
    [
        {"season": WORKED_SEASON},
        {"input": "data.csv"},
        {"input": "data.csv", "season": WORKED_SEASON, "mode": "fast"},
        {"input": "data.csv", "season": WORKED_SEASON, "timezone": "Mars/Olympus"},
        {"input": "data.csv", "season": WORKED_SEASON, "factor_m": 0},
        {"input": "data.csv", "season": WORKED_SEASON, "factor_m": "three"},
        {"input": "data.csv", "season": {"max_period": 2}},
    ],
)
def test_run_config_invalid(raw: Dict[str, Any]) -> None:
    """Test missing and invalid fields."""
    with pytest.raises(StpmConfigError):
        RunConfig(raw)  # type: ignore[arg-type]


def test_run_config_validate_paths(tmp_path: Path) -> None:
    """Test the input file must exist."""
    config = RunConfig({"input": str(tmp_path / "x.csv"), "season": WORKED_SEASON})
    with pytest.raises(StpmConfigError):
        config.validate_paths()
    (tmp_path / "x.csv").write_text("A\n1\n", "utf-8")
    config.validate_paths()


def test_result_json_round_trip(
    worked_db: SequenceDatabase, worked_config: MinerConfig
) -> None:
    """Test the patterns document gives the result back."""
    result = mine(worked_db, worked_config)
    data = json.loads(json.dumps(result.to_json_data()))
    loaded = MiningResult.from_json_data(data)

    assert data["schema_version"] == SCHEMA_VERSION
    assert data["thresholds"] == {
        "max_period": 2,
        "min_density": 3,
        "dist_interval": [4, 10],
        "min_season": 2,
        "n_granules": 14,
    }
    assert loaded.keys() == result.keys()
    assert [m.to_data() for m in loaded] == [m.to_data() for m in result]
    assert loaded.thresholds == result.thresholds
    item = next(p for p in data["patterns"] if p["events"] == ["C:1", "D:1", "C:0"])
    assert item["support"] == [1, 2, 3, 11, 12, 14]
    assert item["seasons"] == [[1, 2, 3], [11, 12, 14]]
    assert item["max_season"] == "2"


def test_accuracy() -> None:
    """Test the share of exact patterns found by the approximation."""
    single = TemporalPattern.single(Event("C", "1"))

    assert accuracy([C1_D1_C0], [C1_D1_C0, single]) == 0.5
    assert accuracy([], []) == 1.0


def test_correlation_graph() -> None:
    """Test edges, lookups in either order and the pruned share."""
    graph = CorrelationGraph(
        {
            "vertices": ["A", "B", "C"],
            "pairs": [
                {
                    "source": "A",
                    "target": "B",
                    "nmi_source_target": 0.9,
                    "nmi_target_source": 0.8,
                    "mu": 0.5,
                    "edge": True,
                },
                {
                    "source": "A",
                    "target": "C",
                    "nmi_source_target": 0.1,
                    "nmi_target_source": 0.2,
                    "mu": 0.5,
                    "edge": False,
                },
                {
                    "source": "B",
                    "target": "C",
                    "nmi_source_target": 0.0,
                    "nmi_target_source": 0.0,
                    "mu": None,
                    "edge": False,
                },
            ],
        }
    )

    assert graph.edges == [("A", "B")]
    assert graph.has_edge("B", "A")
    assert not graph.has_edge("A", "C")
    assert not graph.has_edge("A", "Z")
    assert graph.pair("C", "B")["mu"] is None
    assert graph.connected_series() == {"A", "B"}
    assert graph.pruned_share() == pytest.approx(2 / 3)
