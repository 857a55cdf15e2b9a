"""Analytic reference values for the label-graph estimator."""

from .gamma import (
    GammaConvergenceError,
    GammaResult,
    TheoryError,
    edge_probability,
    expected_tree_components,
    gamma,
    gamma_closed_form,
    gamma_series,
    gamma_table,
)
from .random_graph import count_tree_components, sample_er_tree_count

__all__ = [
    "GammaConvergenceError",
    "GammaResult",
    "TheoryError",
    "count_tree_components",
    "edge_probability",
    "expected_tree_components",
    "gamma",
    "gamma_closed_form",
    "gamma_series",
    "gamma_table",
    "sample_er_tree_count",
]
