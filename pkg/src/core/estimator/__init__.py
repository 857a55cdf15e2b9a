"""Labeling process, label graph and the tree-component distance estimate."""

from .labeling import EstimatorError, Labeling, init_labeling, update_labeling
from .label_graph import LabelGraph, distance_estimate, record_pair, tree_component_count

__all__ = [
    "EstimatorError",
    "LabelGraph",
    "Labeling",
    "distance_estimate",
    "init_labeling",
    "record_pair",
    "tree_component_count",
    "update_labeling",
]
