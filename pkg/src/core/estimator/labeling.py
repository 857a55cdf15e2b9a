"""Labeling process: a bijection from adjacencies to labels 1..n+k."""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from src.core.dcj import DcjMove
from src.core.genome import Adjacency, Genome

logger = logging.getLogger(__name__)


class EstimatorError(ValueError):
    """Raised when labels or label-graph updates are inconsistent."""


class Labeling:
    """Labels of the adjacencies of one genome.

    Stored per vertex: both endpoints of an adjacency carry its label.
    """

    def __init__(self, labels: Sequence[int], size: int):
        self._labels: List[int] = list(labels)
        self.size = size

    def label_of(self, vertex: int) -> int:
        return self._labels[vertex]

    def label_of_edge(self, edge: Tuple[int, int]) -> int:
        u, v = edge
        label = self._labels[u]
        if self._labels[v] != label:
            raise EstimatorError(f"Endpoints of ({u},{v}) carry labels {label} and {self._labels[v]}")
        return label

    def __len__(self) -> int:
        return self.size

    def is_bijective(self, genome: Genome) -> bool:
        """Every adjacency carries one label and labels are exactly 1..n+k."""
        if genome.size != self.size or len(self._labels) != genome.vertex_count:
            return False
        seen = set()
        for u, v in genome.oriented_pairs():
            label = self._labels[u]
            if self._labels[v] != label or label in seen:
                return False
            seen.add(label)
        return seen == set(range(1, self.size + 1))

    def as_dict(self, genome: Genome) -> Dict[Adjacency, int]:
        ext = genome.extremity
        return {
            Adjacency(ext(min(u, v)), ext(max(u, v))): self._labels[u]
            for u, v in genome.oriented_pairs()
        }

    def copy(self) -> "Labeling":
        return Labeling(self._labels, self.size)

    def _set(self, edge: Tuple[int, int], label: int) -> None:
        self._labels[edge[0]] = label
        self._labels[edge[1]] = label


def init_labeling(genome: Genome, permutation: Optional[Sequence[int]] = None) -> Labeling:
    """Label adjacencies 1..n+k along the standard direction, chromosome by chromosome.

    Args:
        genome: Starting genome
        permutation: Optional relabeling; label l becomes ``permutation[l-1]``

    Returns:
        Initial labeling
    """
    size = genome.size
    if permutation is not None and sorted(permutation) != list(range(1, size + 1)):
        raise EstimatorError(f"Permutation must rearrange 1..{size}")

    labels = [0] * genome.vertex_count
    for index, (u, v) in enumerate(genome.oriented_pairs(), start=1):
        label = permutation[index - 1] if permutation is not None else index
        labels[u] = label
        labels[v] = label
    return Labeling(labels, size)


def update_labeling(labeling: Labeling, move: DcjMove) -> Labeling:
    """Carry labels across an applied move.

    With x the smallest of the four endpoints, the new edge through x inherits
    the label of the old edge through x and the other new edge inherits the
    label of the other old edge. All other labels are unchanged.

    Only the four endpoint labels are read and written, so the genome may be
    rewired before or after the call.
    """
    old_first, old_second = move.e, move.eprime
    new_first, new_second = move.new_edges
    x = min(old_first + old_second)

    if x in old_first:
        kept, other_old = old_first, old_second
    else:
        kept, other_old = old_second, old_first
    if x in new_first and x not in new_second:
        through_x, other_new = new_first, new_second
    elif x in new_second and x not in new_first:
        through_x, other_new = new_second, new_first
    else:
        raise EstimatorError(f"Endpoint {x} is not on exactly one new edge")

    inherited = labeling.label_of_edge(kept)
    other_label = labeling.label_of_edge(other_old)
    labeling._set(through_x, inherited)
    labeling._set(other_new, other_label)
    return labeling
