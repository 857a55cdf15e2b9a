"""Genomes of G(n, k) stored as an adjacency matching over integer vertex ids."""

from __future__ import annotations

import logging
from typing import Dict, Iterator, List, Sequence, Tuple

from .models import Adjacency, Chromosome, ChromosomeShape, Extremity, GenomeError

logger = logging.getLogger(__name__)

# (n, k, gene-gene adjacencies, gene extremities next to a telomere)
CanonicalKey = Tuple[int, int, Tuple[Tuple[int, int], ...], Tuple[int, ...]]


class Genome:
    """A genome with n genes and k linear chromosomes.

    Vertices are integer ids ordered like ``Extremity``: the tail of gene i is
    ``2(i-1)``, its head ``2(i-1)+1`` and telomere j is ``2n+j-1``. The gene
    partner of a gene vertex v is ``v ^ 1``. Adjacencies are kept as a perfect
    matching (``mate``) together with the standard direction of every
    chromosome, which is repaired locally after each rejoin.

    Each chromosome is stored as a vertex sequence in standard direction whose
    adjacencies are the pairs ``(seq[2i], seq[2i+1])``. Linear sequences run
    telomere to telomere; circular ones start at the head of their smallest
    gene and end at its tail.
    """

    def __init__(self, n: int, k: int, mate: Sequence[int]):
        if n < 0 or k < 0:
            raise GenomeError(f"Gene and chromosome counts must be non-negative (n={n}, k={k})")
        if n + k == 0:
            raise GenomeError("Genome must have at least one adjacency")
        self.n = n
        self.k = k
        self._mate: List[int] = list(mate)
        self._check_matching()

        size = len(self._mate)
        self._forward: List[bool] = [False] * size
        self._comp: List[int] = [-1] * size
        self._members: Dict[int, List[int]] = {}
        self._circular: Dict[int, bool] = {}
        self._next_comp = 0
        self._circular_count = 0
        self._build_components()

    # ------------------------------------------------------------------
    # Construction helpers
    # ------------------------------------------------------------------

    def _check_matching(self) -> None:
        size = 2 * (self.n + self.k)
        mate = self._mate
        if len(mate) != size:
            raise GenomeError(f"Expected {size} vertices, got {len(mate)}")
        for v, m in enumerate(mate):
            if not 0 <= m < size:
                raise GenomeError(f"Vertex {v} matched to unknown vertex {m}")
            if m == v:
                raise GenomeError(f"Vertex {v} is matched to itself")
            if mate[m] != v:
                raise GenomeError(f"Adjacencies are not a perfect matching at vertex {v}")

    def _walk(self, start: int) -> Tuple[List[int], bool]:
        """Follow adjacency, gene edge, adjacency... from ``start``.

        Returns the visited vertices and whether the walk closed into a cycle.
        """
        mate = self._mate
        limit = 2 * self.n
        seq = [start]
        cur = start
        while True:
            m = mate[cur]
            seq.append(m)
            if m >= limit:
                return seq, False
            g = m ^ 1
            if g == start:
                return seq, True
            seq.append(g)
            cur = g

    def _standard_sequence(self, vertex: int) -> Tuple[List[int], bool]:
        seq, circular = self._walk(vertex)
        limit = 2 * self.n

        if circular:
            smallest = min(seq) | 1
            seq, _ = self._walk(smallest)
            return seq, True

        if seq[0] < limit:
            seq, _ = self._walk(seq[-1])
        if len(seq) == 2:
            if seq[0] > seq[1]:
                seq.reverse()
            return seq, False

        tail = min(seq[1:-1])
        if seq.index(tail) % 2 == 0:
            seq.reverse()
        return seq, False

    def _assign(self, seq: List[int], circular: bool) -> None:
        cid = self._next_comp
        self._next_comp += 1
        forward = self._forward
        comp = self._comp
        for i in range(0, len(seq), 2):
            forward[seq[i]] = True
            forward[seq[i + 1]] = False
            comp[seq[i]] = cid
            comp[seq[i + 1]] = cid
        self._members[cid] = seq
        self._circular[cid] = circular
        if circular:
            self._circular_count += 1

    def _build_components(self) -> None:
        limit = 2 * self.n
        for t in range(limit, len(self._mate)):
            if self._comp[t] < 0:
                self._assign(*self._standard_sequence(t))
        for v in range(limit):
            if self._comp[v] < 0:
                self._assign(*self._standard_sequence(v))

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    @property
    def size(self) -> int:
        """Number of adjacencies, n + k."""
        return self.n + self.k

    @property
    def vertex_count(self) -> int:
        return len(self._mate)

    @property
    def circular_count(self) -> int:
        return self._circular_count

    @property
    def chromosome_count(self) -> int:
        return len(self._members)

    def mate(self, vertex: int) -> int:
        """The vertex sharing an adjacency with ``vertex``."""
        return self._mate[vertex]

    def is_telomere(self, vertex: int) -> bool:
        return vertex >= 2 * self.n

    def oriented(self, vertex: int) -> Tuple[int, int]:
        """The adjacency containing ``vertex`` in standard orientation."""
        m = self._mate[vertex]
        if self._forward[vertex]:
            return (vertex, m)
        return (m, vertex)

    def component_id(self, vertex: int) -> int:
        return self._comp[vertex]

    def component(self, vertex: int) -> List[int]:
        """Standard-direction vertex sequence of the chromosome holding ``vertex``."""
        return self._members[self._comp[vertex]]

    def is_circular(self, vertex: int) -> bool:
        return self._circular[self._comp[vertex]]

    def components(self) -> List[Tuple[bool, List[int]]]:
        """(circular, sequence) per chromosome: linear ones by smaller telomere, then circular by smallest gene."""

        def order(item: Tuple[int, List[int]]) -> Tuple[int, int]:
            cid, seq = item
            if self._circular[cid]:
                return (1, min(seq))
            return (0, min(seq[0], seq[-1]))

        return [
            (self._circular[cid], seq)
            for cid, seq in sorted(self._members.items(), key=order)
        ]

    def circular_components(self) -> List[List[int]]:
        return [seq for cid, seq in self._members.items() if self._circular[cid]]

    def linear_components(self) -> List[List[int]]:
        return [seq for cid, seq in self._members.items() if not self._circular[cid]]

    def oriented_pairs(self) -> Iterator[Tuple[int, int]]:
        """All adjacencies as oriented vertex pairs, chromosome by chromosome."""
        for _, seq in self.components():
            for i in range(0, len(seq), 2):
                yield (seq[i], seq[i + 1])

    def extremity(self, vertex: int) -> Extremity:
        return Extremity.from_vertex(vertex, self.n)

    def adjacencies(self) -> List[Adjacency]:
        """Adjacencies as unordered pairs, smaller extremity first, sorted."""
        pairs = sorted((min(u, v), max(u, v)) for u, v in self.oriented_pairs())
        return [Adjacency(self.extremity(u), self.extremity(v)) for u, v in pairs]

    def standard_direction(self) -> List[Adjacency]:
        """Adjacencies oriented along the standard direction of their chromosome."""
        return [
            Adjacency(self.extremity(u), self.extremity(v))
            for u, v in self.oriented_pairs()
        ]

    def decompose(self) -> List[Chromosome]:
        """Chromosomes in standard direction."""
        limit = 2 * self.n
        chromosomes: List[Chromosome] = []
        for circular, seq in self.components():
            if circular:
                gene_edges = [(seq[-1], seq[0])] + [
                    (seq[i], seq[i + 1]) for i in range(1, len(seq) - 1, 2)
                ]
            else:
                gene_edges = [(seq[i], seq[i + 1]) for i in range(1, len(seq) - 1, 2)]
            genes = tuple(
                (entry // 2 + 1) * (1 if entry % 2 == 0 else -1) for entry, _ in gene_edges
            )
            if circular:
                chromosomes.append(Chromosome(ChromosomeShape.CIRCULAR, genes))
            else:
                telomeres = (seq[0] - limit + 1, seq[-1] - limit + 1)
                chromosomes.append(Chromosome(ChromosomeShape.LINEAR, genes, telomeres))
        return chromosomes

    def canonical_form(self) -> CanonicalKey:
        """Key shared by two genomes exactly when their DCJ distance is 0."""
        limit = 2 * self.n
        mate = self._mate
        inner = tuple(
            (v, mate[v]) for v in range(limit) if v < mate[v] < limit
        )
        ends = tuple(v for v in range(limit) if mate[v] >= limit)
        return (self.n, self.k, inner, ends)

    def validate(self) -> None:
        """Check the matching, chromosome census and stored directions."""
        self._check_matching()
        seen = 0
        linear = 0
        for cid, seq in self._members.items():
            if len(seq) % 2:
                raise GenomeError(f"Chromosome {cid} has an odd vertex sequence")
            for i in range(0, len(seq), 2):
                u, v = seq[i], seq[i + 1]
                if self._mate[u] != v or not self._forward[u] or self._forward[v]:
                    raise GenomeError(f"Stale direction on adjacency ({u},{v})")
                if self._comp[u] != cid or self._comp[v] != cid:
                    raise GenomeError(f"Stale chromosome index on adjacency ({u},{v})")
            seen += len(seq)
            if not self._circular[cid]:
                linear += 1
        if seen != len(self._mate):
            raise GenomeError(f"Chromosomes cover {seen} of {len(self._mate)} vertices")
        if linear != self.k:
            raise GenomeError(f"Expected {self.k} linear chromosomes, found {linear}")
        if sum(self._circular.values()) != self._circular_count:
            raise GenomeError("Circular chromosome count is out of date")

    # ------------------------------------------------------------------
    # Mutation
    # ------------------------------------------------------------------

    def rejoin(
        self,
        removed: Tuple[Tuple[int, int], Tuple[int, int]],
        added: Tuple[Tuple[int, int], Tuple[int, int]],
    ) -> None:
        """Replace two adjacencies by two others on the same four vertices.

        Only the chromosomes touched by the rejoin are re-traversed. Callers are
        responsible for passing a legal rejoin (see ``src.core.dcj``).
        """
        (a, b), (c, d) = removed
        stale = {self._comp[a], self._comp[c]}
        for cid in stale:
            del self._members[cid]
            if self._circular.pop(cid):
                self._circular_count -= 1

        mate = self._mate
        for u, v in added:
            mate[u] = v
            mate[v] = u

        for v in (a, b, c, d):
            if self._comp[v] in stale:
                self._assign(*self._standard_sequence(v))

    def copy(self) -> "Genome":
        clone = Genome.__new__(Genome)
        clone.n = self.n
        clone.k = self.k
        clone._mate = list(self._mate)
        clone._forward = list(self._forward)
        clone._comp = list(self._comp)
        clone._members = dict(self._members)
        clone._circular = dict(self._circular)
        clone._next_comp = self._next_comp
        clone._circular_count = self._circular_count
        return clone

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Genome):
            return NotImplemented
        return self.n == other.n and self.k == other.k and self._mate == other._mate

    __hash__ = None  # mutable

    def __repr__(self) -> str:
        body = " | ".join(str(ch) for ch in self.decompose())
        return f"Genome(n={self.n}, k={self.k}, [{body}])"


def decompose(genome: Genome) -> List[Chromosome]:
    """Recover the chromosomes of ``genome`` in standard direction."""
    return genome.decompose()


def standard_direction(genome: Genome) -> List[Adjacency]:
    """Oriented adjacency set of ``genome``."""
    return genome.standard_direction()


def canonical_form(genome: Genome) -> CanonicalKey:
    """Key invariant under telomere relabeling and chromosome flips/rotations."""
    return genome.canonical_form()
