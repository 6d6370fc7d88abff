"""Seasonal temporal pattern mining models."""
from .config import MinerConfig
from .config import RunConfig
from .database import Event
from .database import EventInstance
from .database import SequenceDatabase
from .granularity import GranularitySpec
from .graph import CorrelationGraph
from .hlh import HLH1
from .hlh import HLHk
from .pattern import TemporalPattern
from .plant import PlantSpec
from .relation import RelationConfig
from .relation import RelationKind
from .relation import Triple
from .result import LevelStats
from .result import MinedPattern
from .result import MiningResult
from .season import ResolvedSeasonConfig
from .season import SeasonAnalysis
from .season import SeasonConfig
from .support import SupportSet
from .symbols import SymbolicDatabase
from .symbols import SymbolicSeries
from .symbols import SymbolMapping


__all__ = [
    "CorrelationGraph",
    "Event",
    "EventInstance",
    "GranularitySpec",
    "HLH1",
    "HLHk",
    "LevelStats",
    "MinedPattern",
    "MinerConfig",
    "MiningResult",
    "PlantSpec",
    "RelationConfig",
    "RelationKind",
    "ResolvedSeasonConfig",
    "RunConfig",
    "SeasonAnalysis",
    "SeasonConfig",
    "SequenceDatabase",
    "SupportSet",
    "SymbolMapping",
    "SymbolicDatabase",
    "SymbolicSeries",
    "TemporalPattern",
    "Triple",
]
