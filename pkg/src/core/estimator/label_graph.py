"""The label graph Z and its tree components."""

from __future__ import annotations

import logging
from typing import Dict, List, Set, Tuple

from .labeling import EstimatorError

logger = logging.getLogger(__name__)


class LabelGraph:
    """Simple graph on labels 1..m with incremental tree-component counting.

    Union-find with path compression and union by size; each root keeps the
    vertex and edge count of its component. A component is a tree exactly when
    edges == vertices - 1.
    """

    def __init__(self, vertex_count: int):
        if vertex_count < 1:
            raise EstimatorError(f"Label graph needs at least one vertex, got {vertex_count}")
        self.vertex_count = vertex_count
        self._parent: List[int] = list(range(vertex_count))
        self._vertices: List[int] = [1] * vertex_count
        self._edges: List[int] = [0] * vertex_count
        self._edge_set: Set[Tuple[int, int]] = set()
        self._trees = vertex_count

    def _index(self, label: int) -> int:
        if not 1 <= label <= self.vertex_count:
            raise EstimatorError(f"Label {label} out of range 1..{self.vertex_count}")
        return label - 1

    def find(self, label: int) -> int:
        """Root index of the component holding ``label``."""
        root = self._index(label)
        parent = self._parent
        while parent[root] != root:
            root = parent[root]
        current = self._index(label)
        while parent[current] != root:
            next_node = parent[current]
            parent[current] = root
            current = next_node
        return root

    def _is_tree(self, root: int) -> bool:
        return self._edges[root] == self._vertices[root] - 1

    def has_edge(self, first: int, second: int) -> bool:
        return (min(first, second), max(first, second)) in self._edge_set

    def add_edge(self, first: int, second: int) -> bool:
        """Connect two labels unless already adjacent. Returns True if an edge was added."""
        if first == second:
            raise EstimatorError(f"Self-loop on label {first}")
        if self.has_edge(first, second):
            return False
        key = (min(first, second), max(first, second))

        r1, r2 = self.find(first), self.find(second)
        self._edge_set.add(key)
        if r1 == r2:
            if self._is_tree(r1):
                self._trees -= 1
            self._edges[r1] += 1
            return True

        both_trees = self._is_tree(r1) and self._is_tree(r2)
        self._trees -= int(self._is_tree(r1)) + int(self._is_tree(r2))
        if self._vertices[r1] < self._vertices[r2]:
            r1, r2 = r2, r1
        self._parent[r2] = r1
        self._vertices[r1] += self._vertices[r2]
        self._edges[r1] += self._edges[r2] + 1
        if both_trees:
            self._trees += 1
        return True

    @property
    def edge_count(self) -> int:
        return len(self._edge_set)

    @property
    def tree_count(self) -> int:
        return self._trees

    def recount_trees(self) -> int:
        """Tree components counted from scratch over all roots."""
        return sum(
            1
            for v in range(self.vertex_count)
            if self._parent[v] == v and self._is_tree(v)
        )

    def component_sizes(self) -> Dict[int, Tuple[int, int]]:
        """(vertices, edges) per component root label."""
        return {
            v + 1: (self._vertices[v], self._edges[v])
            for v in range(self.vertex_count)
            if self._parent[v] == v
        }

    def edges(self) -> List[Tuple[int, int]]:
        return sorted(self._edge_set)


def record_pair(graph: LabelGraph, first: int, second: int) -> LabelGraph:
    """Connect the labels of the two cut adjacencies of one jump."""
    graph.add_edge(first, second)
    return graph


def tree_component_count(graph: LabelGraph) -> int:
    """Number of tree components, isolated vertices included."""
    return graph.tree_count


def distance_estimate(n: int, trees: int, clamp: bool = True) -> int:
    """n - trees, clamped at zero unless ``clamp`` is False."""
    estimate = n - trees
    return max(0, estimate) if clamp else estimate
