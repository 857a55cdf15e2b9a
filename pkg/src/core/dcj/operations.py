"""Applying DCJ operations and enumerating DCJ neighbourhoods."""

from __future__ import annotations

import logging
from itertools import combinations
from typing import List, Tuple

from src.core.genome import Genome
from .models import DcjError, DcjMove, JoinType, RestrictedState

logger = logging.getLogger(__name__)


def apply_dcj(genome: Genome, move: DcjMove, in_place: bool = False) -> Genome:
    """Apply a DCJ move.

    delta1 replaces {(a,b),(c,d)} by {(a,c),(b,d)} and delta2 by
    {(a,d),(b,c)}. The standard direction of the touched chromosomes is
    recomputed.

    Args:
        genome: Genome holding both adjacencies
        move: The move to apply
        in_place: Rewire ``genome`` itself instead of a copy

    Returns:
        The resulting genome

    Raises:
        DcjError: If an edge is not an adjacency of the genome or both edges are
            the same adjacency
    """
    (a, b), (c, d) = move.e, move.eprime
    size = genome.vertex_count
    for u, v in (move.e, move.eprime):
        if not (0 <= u < size and 0 <= v < size) or genome.mate(u) != v:
            raise DcjError(f"({u},{v}) is not an adjacency of the genome")
    if {a, b} == {c, d}:
        raise DcjError(f"Both edges are the same adjacency ({a},{b})")

    target = genome if in_place else genome.copy()
    target.rejoin((move.e, move.eprime), move.new_edges)
    return target


def neighbors(genome: Genome, dedupe: bool = False) -> List[Tuple[Genome, JoinType]]:
    """All genomes one DCJ away from ``genome``.

    Every unordered pair of adjacencies is cut and rejoined both ways, so the
    raw list has 2 * C(n+k, 2) entries. With ``dedupe`` only the first genome of
    each canonical class is kept.
    """
    pairs = list(genome.oriented_pairs())
    result: List[Tuple[Genome, JoinType]] = []
    seen = set()
    for e, eprime in combinations(pairs, 2):
        for join in (JoinType.DELTA1, JoinType.DELTA2):
            neighbor = apply_dcj(genome, DcjMove(e, eprime, join))
            if dedupe:
                key = neighbor.canonical_form()
                if key in seen:
                    continue
                seen.add(key)
            result.append((neighbor, join))
    return result


def restricted_state(genome: Genome) -> RestrictedState:
    """Classify a single-linear-chromosome genome as U, U_tilde or other."""
    if genome.k != 1:
        raise DcjError(f"Restricted states need exactly one linear chromosome, got k={genome.k}")
    circles = genome.circular_count
    if circles == 0:
        return RestrictedState.U
    if circles == 1:
        return RestrictedState.U_TILDE
    return RestrictedState.OTHER
