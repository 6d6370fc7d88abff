# coding: utf-8
"""Shared fixtures: the worked database and its mining settings."""
import pytest

from .const import WORKED_FACTOR_M
from .const import WORKED_ROWS
from .const import WORKED_SEASON
from stpm.model.config import MinerConfig
from stpm.model.database import SequenceDatabase
from stpm.model.granularity import GranularitySpec
from stpm.model.relation import RelationConfig
from stpm.model.season import SeasonConfig
from stpm.model.symbols import SymbolicDatabase
from stpm.symbolic import build_sequence_db


@pytest.fixture
def worked_symbolic() -> SymbolicDatabase:
    """Return the six-series symbolic database."""
    return SymbolicDatabase.from_strings(WORKED_ROWS)


@pytest.fixture
def worked_db(worked_symbolic: SymbolicDatabase) -> SequenceDatabase:
    """Return the worked database grouped in granules of 3."""
    return build_sequence_db(worked_symbolic, GranularitySpec.of(WORKED_FACTOR_M))


@pytest.fixture
def worked_config() -> MinerConfig:
    """Return the worked thresholds with patterns of up to 3 events."""
    return MinerConfig(
        season=SeasonConfig(WORKED_SEASON),
        relation=RelationConfig.of(),
        max_pattern_size=3,
    )
