"""Replicate fan-out and CSV output."""

from __future__ import annotations

import csv
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, TextIO

from src.config import get_settings
from src.core.walks import CSV_COLUMNS, SampleRecord, WalkConfig, run
from .models import ExperimentConfig

logger = logging.getLogger(__name__)


class ExperimentRunner:
    """Runs every (p value, replicate) trajectory of an experiment.

    Replicates may run in worker processes; results are merged in
    (p value, replicate, checkpoint) order whatever the completion order.
    """

    def __init__(
        self,
        workers: Optional[int] = None,
        on_replicate: Optional[Callable[[WalkConfig], None]] = None,
    ):
        """Initialize the runner.

        Args:
            workers: Worker processes (defaults to the ``workers`` setting)
            on_replicate: Called after each replicate completes, for progress display
        """
        self.workers = workers if workers is not None else get_settings().workers
        self.on_replicate = on_replicate

    def run(self, config: ExperimentConfig) -> List[SampleRecord]:
        configs = config.walk_configs()
        started = time.perf_counter()
        logger.info(
            f"Running {len(configs)} replicate(s) of the {config.model.value} model "
            f"({config.model.description()}) on {self.workers} worker(s)"
        )

        batches: List[List[SampleRecord]] = []
        if self.workers <= 1 or len(configs) <= 1:
            for walk_config in configs:
                batches.append(run(walk_config))
                self._progress(walk_config)
        else:
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                # map yields in submission order
                for walk_config, records in zip(configs, executor.map(run, configs)):
                    batches.append(records)
                    self._progress(walk_config)

        logger.info(f"Experiment finished in {time.perf_counter() - started:.2f}s")
        return [record for batch in batches for record in batch]

    def _progress(self, walk_config: WalkConfig) -> None:
        if self.on_replicate is not None:
            self.on_replicate(walk_config)


def run_experiment(config: ExperimentConfig, workers: Optional[int] = None) -> List[SampleRecord]:
    """Run all replicates of ``config`` and return their records in order."""
    return ExperimentRunner(workers=workers).run(config)


def write_records(records: Iterable[SampleRecord], stream: TextIO) -> int:
    """Write the header and one CSV row per record. Returns the row count."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    count = 0
    for record in records:
        writer.writerow(record.to_row())
        count += 1
    return count
