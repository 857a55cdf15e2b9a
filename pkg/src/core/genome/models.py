"""Genome building blocks: extremities, adjacencies and chromosomes."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import total_ordering
from typing import Optional, Tuple


class GenomeError(ValueError):
    """Raised when a genome or chromosome description is invalid."""


class ExtremityKind(str, Enum):
    """Vertex kinds of the alternating graph."""

    GENE = "gene"
    TELOMERE = "telomere"


@total_ordering
@dataclass(frozen=True)
class Extremity:
    """A vertex of a genome: the tail (-i) or head (+i) of gene i, or telomere j.

    Extremities are totally ordered: gene extremities first, by gene id and
    tail before head, then telomeres by index. Inside a genome the same order
    is realised by integer vertex ids (see ``vertex``).
    """

    kind: ExtremityKind
    index: int
    head: bool = False

    @classmethod
    def tail_of(cls, gene: int) -> "Extremity":
        return cls(ExtremityKind.GENE, gene, False)

    @classmethod
    def head_of(cls, gene: int) -> "Extremity":
        return cls(ExtremityKind.GENE, gene, True)

    @classmethod
    def telomere(cls, index: int) -> "Extremity":
        return cls(ExtremityKind.TELOMERE, index, False)

    @classmethod
    def from_vertex(cls, vertex: int, n: int) -> "Extremity":
        """Decode an integer vertex id of a genome with n genes."""
        if vertex < 0:
            raise GenomeError(f"Negative vertex id: {vertex}")
        if vertex < 2 * n:
            return cls(ExtremityKind.GENE, vertex // 2 + 1, bool(vertex & 1))
        return cls(ExtremityKind.TELOMERE, vertex - 2 * n + 1, False)

    @property
    def is_telomere(self) -> bool:
        return self.kind == ExtremityKind.TELOMERE

    @property
    def sort_key(self) -> Tuple[int, int, int]:
        if self.is_telomere:
            return (1, self.index, 0)
        return (0, self.index, 1 if self.head else 0)

    def vertex(self, n: int) -> int:
        """Integer vertex id: -i -> 2(i-1), +i -> 2(i-1)+1, telomere j -> 2n+j-1."""
        if self.is_telomere:
            return 2 * n + self.index - 1
        return 2 * (self.index - 1) + (1 if self.head else 0)

    def __lt__(self, other: "Extremity") -> bool:
        if not isinstance(other, Extremity):
            return NotImplemented
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        if self.is_telomere:
            return f"t{self.index}"
        return f"{'+' if self.head else '-'}{self.index}"


@dataclass(frozen=True)
class Adjacency:
    """An adjacency (u, v). Ordered when taken from a standard direction."""

    u: Extremity
    v: Extremity

    def __post_init__(self):
        if self.u == self.v:
            raise GenomeError(f"Adjacency joins {self.u} to itself")

    def __str__(self) -> str:
        return f"({self.u},{self.v})"


class ChromosomeShape(str, Enum):
    """Chromosome shapes."""

    LINEAR = "L"
    CIRCULAR = "C"


@dataclass(frozen=True)
class Chromosome:
    """A chromosome as a list of signed gene ids.

    Linear chromosomes may be null (no genes); they carry a telomere pair once
    they belong to a genome. Circular chromosomes are read cyclically.
    """

    shape: ChromosomeShape
    genes: Tuple[int, ...] = ()
    telomeres: Optional[Tuple[int, int]] = field(default=None, compare=False)

    @classmethod
    def linear(cls, *genes: int) -> "Chromosome":
        return cls(ChromosomeShape.LINEAR, tuple(genes))

    @classmethod
    def circular(cls, *genes: int) -> "Chromosome":
        if not genes:
            raise GenomeError("A circular chromosome needs at least one gene")
        return cls(ChromosomeShape.CIRCULAR, tuple(genes))

    @property
    def is_linear(self) -> bool:
        return self.shape == ChromosomeShape.LINEAR

    @property
    def is_null(self) -> bool:
        return self.is_linear and not self.genes

    def flipped(self) -> "Chromosome":
        """The same chromosome read in the opposite direction."""
        genes = tuple(-g for g in reversed(self.genes))
        telomeres = None
        if self.telomeres is not None:
            telomeres = (self.telomeres[1], self.telomeres[0])
        return Chromosome(self.shape, genes, telomeres)

    def normalized(self) -> Tuple[str, Tuple[int, ...]]:
        """Key that ignores flips (and rotations for circular chromosomes)."""
        forms = [self.genes, self.flipped().genes]
        if not self.is_linear:
            rotations = []
            for genes in forms:
                rotations.extend(genes[i:] + genes[:i] for i in range(len(genes)))
            forms = rotations
        return (self.shape.value, min(forms))

    def __str__(self) -> str:
        body = " ".join(str(g) for g in self.genes)
        return f"{self.shape.value}: {body}".rstrip()
