"""Erdős–Rényi reference sampler for the label graph."""

from __future__ import annotations

import logging

import networkx as nx
import numpy as np

from .gamma import TheoryError

logger = logging.getLogger(__name__)


def count_tree_components(graph: nx.Graph) -> int:
    """Components whose edge count is one less than their vertex count."""
    trees = 0
    for component in nx.connected_components(graph):
        edges = graph.subgraph(component).number_of_edges()
        if edges == len(component) - 1:
            trees += 1
    return trees


def sample_er_tree_count(m: int, p_edge: float, rng: np.random.Generator) -> int:
    """Tree components of one G(m, p_edge) sample.

    Edges are drawn by geometric skipping (``fast_gnp_random_graph``), seeded
    from ``rng`` so samples follow the caller's stream.
    """
    if not 0.0 <= p_edge <= 1.0:
        raise TheoryError(f"Edge probability must lie in [0, 1], got {p_edge}")
    if m < 1:
        raise TheoryError(f"Vertex count must be positive, got {m}")
    seed = int(rng.integers(2**32))
    graph = nx.fast_gnp_random_graph(m, p_edge, seed=seed)
    return count_tree_components(graph)
