# -*- coding: utf-8 -*-
"""Runner loading the input of a run, mining it and writing the artifacts."""
import logging
import time
import tracemalloc
from contextlib import contextmanager
from typing import Any
from typing import Dict
from typing import Iterator
from typing import Optional

from .approx import build_correlation_graph
from .approx import mine_approx
from .const import MODE_APPROX
from .const import SCHEMA_VERSION
from .helpers import timestamp_to_datetime_with_tz
from .io import read_csv_table
from .io import symbolic_database_from_table
from .io import write_json
from .miner import mine
from .model.config import RunConfig
from .model.database import SequenceDatabase
from .model.graph import CorrelationGraph
from .model.result import MiningResult
from .model.symbols import SymbolicDatabase
from .symbolic import build_sequence_db
from .symbolic import build_symbolic_database

_LOGGER = logging.getLogger(__name__)


class StpmRunner:
    """Facade over one mining run.

    The input is read and symbolized once; mining, graph building and artifact
    writing reuse it. Each phase records its wall time and allocation peak for the
    run manifest (peaks are best effort, as reported by tracemalloc).
    """

    def __init__(self, config: RunConfig) -> None:
        """Initialize the runner.

        Args:
            config: The validated run configuration.
        """
        self.config = config
        self.phases: Dict[str, Dict[str, float]] = {}
        self._symbolic: Optional[SymbolicDatabase] = None
        self._sequence: Optional[SequenceDatabase] = None
        self._graph: Optional[CorrelationGraph] = None

    @contextmanager
    def phase(self, name: str) -> Iterator[None]:
        """Time a phase and record its allocation peak."""
        tracing = tracemalloc.is_tracing()
        if not tracing:
            tracemalloc.start()
        tracemalloc.reset_peak()
        started = time.perf_counter()
        try:
            yield
        finally:
            seconds = time.perf_counter() - started
            _, peak = tracemalloc.get_traced_memory()
            if not tracing:
                tracemalloc.stop()
            self.phases[name] = {"seconds": round(seconds, 6), "peak_kib": peak // 1024}
            _LOGGER.info("Phase %s: %.3fs, peak %d KiB", name, seconds, peak // 1024)

    #
    # Input
    #
    @property
    def symbolic_db(self) -> SymbolicDatabase:
        """Return the symbolic database of the input, reading it on first use."""
        if self._symbolic is None:
            self.config.validate_paths()
            with self.phase("read"):
                table = read_csv_table(
                    self.config.input,
                    symbolic=self.config.symbolic,
                    tz_name=self.config.timezone,
                )
                if self.config.symbolic:
                    self._symbolic = symbolic_database_from_table(table)
                else:
                    self._symbolic = build_symbolic_database(
                        table.columns, self.config.symbols
                    )
        return self._symbolic

    @property
    def sequence_db(self) -> SequenceDatabase:
        """Return the sequence database of the input."""
        if self._sequence is None:
            db_syb = self.symbolic_db
            with self.phase("sequence"):
                self._sequence = build_sequence_db(db_syb, self.config.granularity)
        return self._sequence

    #
    # Mining
    #
    def correlation_graph(self) -> CorrelationGraph:
        """Return the correlation graph of the input."""
        if self._graph is None:
            db = self.sequence_db
            thresholds = self.config.miner.season.resolve(len(db))
            with self.phase("graph"):
                self._graph = build_correlation_graph(
                    self.symbolic_db,
                    thresholds,
                    len(db),
                    threads=self.config.miner.threads,
                )
        return self._graph

    def mine(self) -> MiningResult:
        """Mine the input in the configured mode.

        Returns:
            The frequent seasonal patterns, with the configuration echo attached.
        """
        db = self.sequence_db
        if self.config.mode == MODE_APPROX:
            graph = self.correlation_graph()
            with self.phase("mine"):
                result = mine_approx(
                    db, self.symbolic_db, self.config.miner, graph=graph
                )
        else:
            with self.phase("mine"):
                result = mine(db, self.config.miner)
        result.config = self.config.echo()
        _LOGGER.info("Mined %d frequent seasonal patterns", len(result))
        return result

    def manifest(self, result: MiningResult) -> Dict[str, Any]:
        """Return the run manifest: thresholds, level counts, phases and reports.

        Args:
            result: The result of the run.

        Returns:
            The manifest document.
        """
        created = timestamp_to_datetime_with_tz(time.time(), self.config.timezone)
        document: Dict[str, Any] = {
            "schema_version": SCHEMA_VERSION,
            "created_at": created.isoformat(),
            "seed": self.config.seed,
            "config": self.config.echo(),
            "thresholds": result.to_json_data()["thresholds"],
            "levels": [stats.to_data() for stats in result.levels],
            "phases": self.phases,
            "patterns": len(result),
        }
        if self._graph is not None:
            document["approximation"] = self.approximation_report()
        return document

    def approximation_report(self) -> Dict[str, float]:
        """Return the shares of series, events and pairs the graph removes."""
        graph = self.correlation_graph()
        connected = graph.connected_series()
        events = self.sequence_db.events()
        kept_events = [event for event in events if event.series in connected]
        n_series = len(graph.vertices)
        return {
            "series_pruned_share": (
                1.0 - len(connected) / n_series if n_series else 0.0
            ),
            "events_pruned_share": (
                1.0 - len(kept_events) / len(events) if events else 0.0
            ),
            "pairs_pruned_share": graph.pruned_share(),
        }

    def run(self) -> MiningResult:
        """Mine and write every configured artifact.

        Returns:
            The result of the run.
        """
        result = self.mine()
        if self.config.output is not None:
            write_json(self.config.output, result.to_json_data())
        if self.config.graph is not None:
            write_json(self.config.graph, self.correlation_graph().raw_data)
        if self.config.manifest is not None:
            write_json(self.config.manifest, self.manifest(result))
        return result


def run(config: RunConfig) -> int:
    """Run a mining configuration end to end.

    Args:
        config: The validated run configuration.

    Returns:
        The exit status, 0 on success. Failures raise StpmError.
    """
    StpmRunner(config).run()
    return 0
