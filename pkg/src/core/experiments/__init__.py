"""Experiment runner, CSV output, summaries and the Erdős–Rényi comparison."""

from .models import ExperimentConfig, Summary, SummaryError, SummaryRow
from .runner import ExperimentRunner, run_experiment, write_records
from .summary import escape_point, load_records, summarize, summary_frame
from .er import ErComparison, er_compare, split_sizes

__all__ = [
    "ErComparison",
    "ExperimentConfig",
    "ExperimentRunner",
    "Summary",
    "SummaryError",
    "SummaryRow",
    "er_compare",
    "escape_point",
    "load_records",
    "run_experiment",
    "split_sizes",
    "summarize",
    "summary_frame",
    "write_records",
]
