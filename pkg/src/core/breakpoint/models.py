"""Breakpoint graph components and move effects."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional


class BreakpointError(ValueError):
    """Raised on incompatible genomes or edges missing from a breakpoint graph."""


class ComponentKind(str, Enum):
    CYCLE = "cycle"
    LINE = "line"


class LineEnds(str, Enum):
    """Which genome the two end telomeres of a line come from."""

    TT = "TT"
    TT_PRIME = "TT′"
    T_PRIME_T_PRIME = "T′T′"


class Alpha(int, Enum):
    """Change of DCJ distance to the reference genome caused by one move."""

    DOWN = -1
    NEUTRAL = 0
    UP = 1


@dataclass
class BpComponent:
    """A cycle or line of the breakpoint graph in natural direction."""

    kind: ComponentKind
    vertices: List[int]
    black_edges: int
    ends: Optional[LineEnds] = None

    @property
    def is_cycle(self) -> bool:
        return self.kind == ComponentKind.CYCLE

    @property
    def edge_count(self) -> int:
        if self.is_cycle:
            return len(self.vertices)
        return len(self.vertices) - 1

    @property
    def is_even(self) -> bool:
        return self.edge_count % 2 == 0

    @property
    def size(self) -> int:
        """Black edges for a cycle, edges for a line."""
        return self.black_edges if self.is_cycle else self.edge_count

    def describe(self) -> str:
        if self.is_cycle:
            return f"cycle ℓ={self.size}"
        return f"line {self.ends.value} ℓ={self.size}"


@dataclass(frozen=True)
class MoveEffect:
    """What a DCJ does to the breakpoint graph against the reference genome.

    ``fragment_size`` is the black-edge size of the smallest cycle produced by
    a split, None when nothing splits.
    """

    alpha: Alpha
    merged: bool
    split: bool
    fragment_size: Optional[int] = None
