"""Seasonal temporal pattern mining."""
from .approx import build_correlation_graph
from .approx import mine_approx
from .miner import mine
from .oracle import oracle_mine
from .runner import StpmRunner
from .symbolic import build_sequence_db

__all__ = [
    "StpmRunner",
    "build_correlation_graph",
    "build_sequence_db",
    "mine",
    "mine_approx",
    "oracle_mine",
]
