"""DCJ move types."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from src.core.genome import Genome


class DcjError(ValueError):
    """Raised when a DCJ move does not apply to a genome."""


class JoinType(str, Enum):
    """The two ways of rejoining four cut extremities."""

    DELTA1 = "delta1"
    DELTA2 = "delta2"

    @property
    def other(self) -> "JoinType":
        return JoinType.DELTA2 if self is JoinType.DELTA1 else JoinType.DELTA1


class RestrictedState(str, Enum):
    """Position of a single-linear-chromosome genome in the restricted model."""

    U = "U"  # one linear chromosome, nothing else
    U_TILDE = "U_tilde"  # plus exactly one circular chromosome
    OTHER = "other"


@dataclass(frozen=True)
class DcjMove:
    """Cut e = (a, b) and e' = (c, d), rejoin according to ``join``.

    Edges are oriented vertex-id pairs; the orientation decides which rejoin
    each join type produces.
    """

    e: Tuple[int, int]
    eprime: Tuple[int, int]
    join: JoinType

    @classmethod
    def standard(cls, genome: Genome, u: int, v: int, join: JoinType) -> "DcjMove":
        """Move on the adjacencies of vertices u and v, oriented by the standard direction."""
        return cls(genome.oriented(u), genome.oriented(v), join)

    @property
    def new_edges(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        (a, b), (c, d) = self.e, self.eprime
        if self.join is JoinType.DELTA1:
            return (a, c), (b, d)
        return (a, d), (b, c)

    def swapped(self) -> "DcjMove":
        return DcjMove(self.eprime, self.e, self.join)

    def describe(self, genome: Genome) -> str:
        ext = genome.extremity
        (a, b), (c, d) = self.e, self.eprime
        return f"{self.join.value} on ({ext(a)},{ext(b)}) ({ext(c)},{ext(d)})"
