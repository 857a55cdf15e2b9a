"""Breakpoint graph construction, DCJ distance and the alpha case table."""

from __future__ import annotations

import logging
import math
from typing import List, Optional, Tuple

from src.core.dcj import DcjMove, JoinType
from src.core.genome import Genome
from .models import (
    Alpha,
    BpComponent,
    BreakpointError,
    ComponentKind,
    LineEnds,
    MoveEffect,
)

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


class BreakpointGraph:
    """Breakpoint graph of a reference genome G1 (gray) and a genome G2 (black).

    Vertex ids: gene extremities ``0..2n-1`` as in ``Genome``, the telomeres T
    of G1 at ``2n..2n+2k-1`` and the renamed telomeres T' of G2 at
    ``2n+2k..2n+4k-1``. Every black edge is indexed by component and position
    along the natural direction of its component.
    """

    def __init__(self, reference: Genome, genome: Genome):
        if reference.n != genome.n or reference.k != genome.k:
            raise BreakpointError(
                f"Genomes differ in size: (n={reference.n}, k={reference.k}) "
                f"vs (n={genome.n}, k={genome.k})"
            )
        self.n = reference.n
        self.k = reference.k
        self.reference = reference
        self.genome = genome

        size = 2 * self.n + 4 * self.k
        self.components: List[BpComponent] = []
        self._comp_of: List[int] = [-1] * size
        self._black_pos: List[int] = [-1] * size
        self._black_tail: List[bool] = [False] * size
        self._decompose()

    # ------------------------------------------------------------------
    # Vertex helpers
    # ------------------------------------------------------------------

    def to_bp(self, vertex: int) -> int:
        """BP id of a vertex of the black genome."""
        return vertex if vertex < 2 * self.n else vertex + 2 * self.k

    def from_bp(self, vertex: int) -> int:
        """Vertex of the black genome for a BP id (gene or T')."""
        if vertex < 2 * self.n:
            return vertex
        if vertex < 2 * self.n + 2 * self.k:
            raise BreakpointError(f"Vertex {vertex} is a reference telomere")
        return vertex - 2 * self.k

    def _gray(self, vertex: int) -> int:
        return self.reference.mate(vertex)

    def _black(self, vertex: int) -> int:
        return self.to_bp(self.genome.mate(self.from_bp(vertex)))

    def _is_telomere(self, vertex: int) -> bool:
        return vertex >= 2 * self.n

    def _is_prime(self, vertex: int) -> bool:
        return vertex >= 2 * self.n + 2 * self.k

    # ------------------------------------------------------------------
    # Decomposition
    # ------------------------------------------------------------------

    def _trace_line(self, start: int, gray_first: bool) -> List[int]:
        seq = [start]
        cur = start
        use_gray = gray_first
        while True:
            nxt = self._gray(cur) if use_gray else self._black(cur)
            seq.append(nxt)
            if self._is_telomere(nxt):
                return seq
            cur = nxt
            use_gray = not use_gray

    def _trace_cycle(self, start: int) -> List[int]:
        seq = [start]
        cur = start
        use_gray = False
        while True:
            nxt = self._gray(cur) if use_gray else self._black(cur)
            if nxt == start:
                return seq
            seq.append(nxt)
            cur = nxt
            use_gray = not use_gray

    def _register(self, seq: List[int], kind: ComponentKind, black_first: bool, ends=None) -> None:
        cid = len(self.components)
        closed = kind == ComponentKind.CYCLE
        edges = len(seq) if closed else len(seq) - 1
        position = 0
        for i in range(edges):
            if (i % 2 == 0) != black_first:
                continue
            u, v = seq[i], seq[(i + 1) % len(seq)]
            self._black_pos[u] = position
            self._black_pos[v] = position
            self._black_tail[u] = True
            self._black_tail[v] = False
            position += 1
        for v in seq:
            self._comp_of[v] = cid
        self.components.append(BpComponent(kind, seq, position, ends))

    def _decompose(self) -> None:
        limit = 2 * self.n
        t_start, t_prime_start = limit, limit + 2 * self.k

        # TT' and TT lines start from T, lowest index first.
        for t in range(t_start, t_prime_start):
            if self._comp_of[t] >= 0:
                continue
            seq = self._trace_line(t, gray_first=True)
            ends = LineEnds.TT_PRIME if self._is_prime(seq[-1]) else LineEnds.TT
            self._register(seq, ComponentKind.LINE, black_first=False, ends=ends)

        for t in range(t_prime_start, t_prime_start + 2 * self.k):
            if self._comp_of[t] >= 0:
                continue
            seq = self._trace_line(t, gray_first=False)
            self._register(seq, ComponentKind.LINE, black_first=True, ends=LineEnds.T_PRIME_T_PRIME)

        for v in range(limit):
            if self._comp_of[v] < 0:
                self._register(self._trace_cycle(v), ComponentKind.CYCLE, black_first=True)

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    @property
    def cycle_count(self) -> int:
        return sum(1 for c in self.components if c.is_cycle)

    @property
    def lines(self) -> List[BpComponent]:
        return [c for c in self.components if not c.is_cycle]

    @property
    def cycles(self) -> List[BpComponent]:
        return [c for c in self.components if c.is_cycle]

    @property
    def even_line_count(self) -> int:
        return sum(1 for c in self.lines if c.is_even)

    def distance(self) -> int:
        """n - C - P_e / 2."""
        even = self.even_line_count
        if even % 2:
            raise BreakpointError(f"Odd number of even lines ({even})")
        return self.n - self.cycle_count - even // 2

    def component_of(self, vertex: int) -> BpComponent:
        cid = self._comp_of[vertex]
        if cid < 0:
            raise BreakpointError(f"Unknown breakpoint vertex {vertex}")
        return self.components[cid]

    def black_edge(self, vertex: int) -> Edge:
        """The black edge at a BP vertex, oriented along the natural direction."""
        if not 0 <= vertex < len(self._comp_of) or (
            self._is_telomere(vertex) and not self._is_prime(vertex)
        ):
            raise BreakpointError(f"Vertex {vertex} has no black edge")
        other = self._black(vertex)
        return (vertex, other) if self._black_tail[vertex] else (other, vertex)

    def _check_black(self, edge: Edge) -> None:
        u, v = edge
        if self.black_edge(u) != (u, v):
            raise BreakpointError(
                f"({u},{v}) is not a black edge in natural direction"
            )

    # ------------------------------------------------------------------
    # Moves
    # ------------------------------------------------------------------

    def translate_move(self, move: DcjMove) -> DcjMove:
        """Express a move on the black genome in the natural-direction convention.

        Reversing exactly one of the two cut edges swaps the outcomes of the two
        joins, so the join type flips when an odd number of edges disagree with
        the natural direction.
        """
        size = self.genome.vertex_count
        flips = 0
        edges = []
        for u, v in (move.e, move.eprime):
            if not (0 <= u < size and 0 <= v < size) or self.genome.mate(u) != v:
                raise BreakpointError(f"({u},{v}) is not an adjacency of the black genome")
            bu, bv = self.to_bp(u), self.to_bp(v)
            natural = self.black_edge(bu)
            if natural != (bu, bv):
                flips += 1
            edges.append(natural)
        if {edges[0][0], edges[0][1]} == {edges[1][0], edges[1][1]}:
            raise BreakpointError("Both edges are the same black edge")
        join = move.join.other if flips % 2 else move.join
        return DcjMove(edges[0], edges[1], join)

    def predict_alpha(self, e: Edge, eprime: Edge, join: JoinType) -> Alpha:
        """Distance change of the natural-direction move on black edges e, e'."""
        self._check_black(e)
        self._check_black(eprime)
        if {e[0], e[1]} == {eprime[0], eprime[1]}:
            raise BreakpointError("Both edges are the same black edge")

        ci, cj = self._comp_of[e[0]], self._comp_of[eprime[0]]
        if ci == cj:
            return Alpha.NEUTRAL if join is JoinType.DELTA1 else Alpha.DOWN

        first, second = self.components[ci], self.components[cj]
        if first.is_cycle or second.is_cycle:
            return Alpha.UP
        if first.is_even and second.is_even:
            return Alpha.UP if join is JoinType.DELTA1 else Alpha.NEUTRAL
        if first.is_even or second.is_even:
            return Alpha.NEUTRAL
        if first.ends == second.ends:
            return Alpha.NEUTRAL
        return Alpha.DOWN

    def move_effect(self, move: DcjMove) -> MoveEffect:
        """Alpha, merge/split and fragment size of a move on the black genome."""
        natural = self.translate_move(move)
        alpha = self.predict_alpha(natural.e, natural.eprime, natural.join)

        ci = self._comp_of[natural.e[0]]
        cj = self._comp_of[natural.eprime[0]]
        if ci != cj:
            merged = self.components[ci].is_cycle or self.components[cj].is_cycle
            return MoveEffect(alpha, merged=merged, split=False)

        if natural.join is JoinType.DELTA1:
            return MoveEffect(alpha, merged=False, split=False)

        component = self.components[ci]
        gap = abs(self._black_pos[natural.e[0]] - self._black_pos[natural.eprime[0]])
        if component.is_cycle:
            fragment = min(gap, component.black_edges - gap)
        else:
            fragment = gap
        return MoveEffect(alpha, merged=False, split=True, fragment_size=fragment)


def build(reference: Genome, genome: Genome) -> BreakpointGraph:
    """Breakpoint graph of ``reference`` (gray) and ``genome`` (black)."""
    return BreakpointGraph(reference, genome)


def dcj_distance(first: Genome, second: Genome) -> int:
    """Exact DCJ distance n - C - P_e/2."""
    return BreakpointGraph(first, second).distance()


def predict_alpha(bp: BreakpointGraph, e: Edge, eprime: Edge, join: JoinType) -> Alpha:
    return bp.predict_alpha(e, eprime, join)


def translate_move(bp: BreakpointGraph, move: DcjMove) -> DcjMove:
    return bp.translate_move(move)


def move_effect(bp: BreakpointGraph, move: DcjMove) -> MoveEffect:
    return bp.move_effect(move)


def path_parity_census(bp: BreakpointGraph) -> Tuple[int, int, int]:
    """(even lines, odd TT lines, odd T'T' lines)."""
    even = odd_tt = odd_primes = 0
    for line in bp.lines:
        if line.is_even:
            even += 1
        elif line.ends == LineEnds.TT:
            odd_tt += 1
        else:
            odd_primes += 1
    return even, odd_tt, odd_primes


def census_text(bp: BreakpointGraph) -> str:
    """One ``cycle ℓ=..`` / ``line TT′ ℓ=..`` line per component."""
    return "\n".join(c.describe() for c in bp.components)


def large_cycle_count(bp: BreakpointGraph, threshold: Optional[float] = None) -> int:
    """Cycles with more than ``threshold`` black edges (default 2 sqrt(n+k))."""
    if threshold is None:
        threshold = 2 * math.sqrt(bp.n + bp.k)
    return sum(1 for c in bp.cycles if c.black_edges > threshold)
