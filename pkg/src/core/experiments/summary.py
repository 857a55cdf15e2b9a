"""Per-checkpoint summaries of sample CSV files and escape-point detection."""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

import pandas as pd

from src.config import get_settings
from src.core.walks import CSV_COLUMNS
from .models import Summary, SummaryError, SummaryRow

logger = logging.getLogger(__name__)

INTEGER_COLUMNS = ["n", "k", "seed", "replicate", "jumps", "distance", "estimate_raw", "estimate"]
FLOAT_COLUMNS = ["c", "t"]


def load_records(source) -> pd.DataFrame:
    """Read a sample CSV and check its columns and value types.

    Raises:
        SummaryError: On missing columns or non-numeric values
    """
    try:
        frame = pd.read_csv(source, dtype={"model": str, "p": str})
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise SummaryError(f"Could not parse sample CSV: {e}")

    missing = [col for col in CSV_COLUMNS if col not in frame.columns]
    if missing:
        raise SummaryError(f"Missing columns: {', '.join(missing)}")

    for col in INTEGER_COLUMNS + FLOAT_COLUMNS:
        try:
            frame[col] = pd.to_numeric(frame[col], errors="raise")
        except (ValueError, TypeError):
            raise SummaryError(f"Column '{col}' holds non-numeric values")
    if frame[INTEGER_COLUMNS + FLOAT_COLUMNS].isna().any().any():
        raise SummaryError("Sample rows have empty required fields")
    if (frame["distance"] < 0).any():
        raise SummaryError("Negative distances found")
    return frame


def escape_point(points: Sequence[Tuple[float, float, int]], epsilon: float) -> Optional[float]:
    """Smallest c with mean(d) < (1 - epsilon) c n, from (c, mean d, n) triples."""
    for c, mean_distance, n in sorted(points):
        if mean_distance < (1.0 - epsilon) * c * n:
            return c
    return None


def summarize(
    source: Union[pd.DataFrame, str, object],
    epsilon: Optional[float] = None,
) -> Summary:
    """Means and standard deviations per (model, p, c) and the escape point per (model, p).

    Args:
        source: Sample CSV path or stream, or an already loaded frame
        epsilon: Escape tolerance (defaults to the ``escape_epsilon`` setting)

    Returns:
        Summary with rows in first-appearance order of (model, p) and increasing c
    """
    if epsilon is None:
        epsilon = get_settings().escape_epsilon
    if not 0.0 <= epsilon < 1.0:
        raise SummaryError(f"epsilon must lie in [0, 1), got {epsilon}")

    frame = source if isinstance(source, pd.DataFrame) else load_records(source)
    summary = Summary(epsilon=epsilon)
    if frame.empty:
        return summary

    grouped = (
        frame.groupby(["model", "p", "c"], sort=False)
        .agg(
            n=("n", "first"),
            replicates=("replicate", "nunique"),
            mean_distance=("distance", "mean"),
            std_distance=("distance", "std"),
            mean_estimate=("estimate", "mean"),
        )
        .reset_index()
    )
    grouped["std_distance"] = grouped["std_distance"].fillna(0.0)

    by_series: Dict[tuple, List[SummaryRow]] = {}
    for record in grouped.itertuples(index=False):
        row = SummaryRow(
            model=record.model,
            p=record.p,
            c=float(record.c),
            n=int(record.n),
            replicates=int(record.replicates),
            mean_distance=float(record.mean_distance),
            std_distance=float(record.std_distance),
            mean_estimate=float(record.mean_estimate),
        )
        row.escaped = row.mean_distance < (1.0 - epsilon) * row.parsimony
        by_series.setdefault((row.model, row.p), []).append(row)

    for key, rows in by_series.items():
        rows.sort(key=lambda r: r.c)
        summary.rows.extend(rows)
        point = escape_point([(r.c, r.mean_distance, r.n) for r in rows], epsilon)
        summary.escape_points[key] = point
        if point is None:
            logger.warning(f"No escape detected for model={key[0]}, p={key[1]}")
        else:
            logger.info(f"Escape for model={key[0]}, p={key[1]} at c={point:g}")
    return summary


def summary_frame(summary: Summary) -> pd.DataFrame:
    """Summary rows as a frame, ready for ``to_csv``."""
    return pd.DataFrame(
        [
            {
                "model": r.model,
                "p": r.p,
                "c": r.c,
                "n": r.n,
                "replicates": r.replicates,
                "mean_distance": r.mean_distance,
                "std_distance": r.std_distance,
                "mean_estimate": r.mean_estimate,
                "escaped": r.escaped,
            }
            for r in summary.rows
        ],
        columns=[
            "model",
            "p",
            "c",
            "n",
            "replicates",
            "mean_distance",
            "std_distance",
            "mean_estimate",
            "escaped",
        ],
    )
