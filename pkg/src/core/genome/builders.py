"""Genome constructors and the plain-text genome format."""

from __future__ import annotations

import logging
from typing import Iterable, List, Optional, Sequence

import numpy as np

from .genome import Genome
from .models import Chromosome, ChromosomeShape, GenomeError

logger = logging.getLogger(__name__)


def _gene_ends(gene: int) -> tuple:
    """(entry, exit) vertices of a signed gene read left to right."""
    tail = 2 * (abs(gene) - 1)
    head = tail + 1
    return (tail, head) if gene > 0 else (head, tail)


def from_chromosomes(chromosomes: Sequence[Chromosome], n: int, k: int) -> Genome:
    """Build a genome from its chromosomes.

    Telomeres are numbered 1..2k in chromosome order, left telomere first.

    Args:
        chromosomes: Linear and circular chromosomes covering genes 1..n
        n: Gene count
        k: Number of linear chromosomes

    Returns:
        Validated genome

    Raises:
        GenomeError: On duplicate, missing or out-of-range genes, or a linear
            chromosome count different from k
    """
    seen = set()
    linear = 0
    for chrom in chromosomes:
        if chrom.is_linear:
            linear += 1
        elif not chrom.genes:
            raise GenomeError("A circular chromosome needs at least one gene")
        for gene in chrom.genes:
            gid = abs(gene)
            if gene == 0 or gid > n:
                raise GenomeError(f"Gene id {gene} out of range 1..{n}")
            if gid in seen:
                raise GenomeError(f"Duplicate gene {gid}")
            seen.add(gid)
    if len(seen) != n:
        missing = sorted(set(range(1, n + 1)) - seen)
        raise GenomeError(f"Missing genes: {missing}")
    if linear != k:
        raise GenomeError(f"Expected {k} linear chromosomes, got {linear}")

    mate = [-1] * (2 * (n + k))
    telomere = 2 * n
    for chrom in chromosomes:
        ends = [v for gene in chrom.genes for v in _gene_ends(gene)]
        if chrom.is_linear:
            seq = [telomere] + ends + [telomere + 1]
            telomere += 2
        else:
            seq = ends[1:] + ends[:1]
        for i in range(0, len(seq), 2):
            mate[seq[i]] = seq[i + 1]
            mate[seq[i + 1]] = seq[i]
    return Genome(n, k, mate)


def identity_genome(sizes: Sequence[int]) -> Genome:
    """Linear chromosomes of consecutive forward genes with the given sizes."""
    if not sizes:
        raise GenomeError("At least one chromosome size is required")
    if any(s <= 0 for s in sizes):
        raise GenomeError(f"Chromosome sizes must be positive: {list(sizes)}")

    chromosomes: List[Chromosome] = []
    start = 1
    for size in sizes:
        chromosomes.append(Chromosome.linear(*range(start, start + size)))
        start += size
    return from_chromosomes(chromosomes, n=start - 1, k=len(sizes))


def random_genome(n: int, k: int, rng: np.random.Generator) -> Genome:
    """Uniformly random genome of G(n, k): a uniform perfect matching on its vertices."""
    order = rng.permutation(2 * (n + k))
    mate = [0] * len(order)
    for i in range(0, len(order), 2):
        u, v = int(order[i]), int(order[i + 1])
        mate[u] = v
        mate[v] = u
    return Genome(n, k, mate)


def parse_chromosomes(lines: Iterable[str]) -> List[Chromosome]:
    """Parse ``L: 1 -2 3`` / ``C: 4 5`` lines. ``#`` starts a comment."""
    chromosomes: List[Chromosome] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise GenomeError(f"Line {lineno}: expected 'L:' or 'C:' prefix, got {raw.strip()!r}")
        prefix, body = line.split(":", 1)
        try:
            shape = ChromosomeShape(prefix.strip().upper())
        except ValueError:
            raise GenomeError(f"Line {lineno}: unknown chromosome shape {prefix.strip()!r}")
        try:
            genes = tuple(int(tok) for tok in body.split())
        except ValueError:
            raise GenomeError(f"Line {lineno}: genes must be signed integers")
        if shape == ChromosomeShape.CIRCULAR and not genes:
            raise GenomeError(f"Line {lineno}: circular chromosome without genes")
        chromosomes.append(Chromosome(shape, genes))
    return chromosomes


def parse_genome(text: str, n: Optional[int] = None, k: Optional[int] = None) -> Genome:
    """Parse a genome in text form.

    When omitted, n is the largest gene id and k the number of linear
    chromosomes.
    """
    chromosomes = parse_chromosomes(text.splitlines())
    if not chromosomes:
        raise GenomeError("No chromosomes found")
    if n is None:
        n = max((abs(g) for ch in chromosomes for g in ch.genes), default=0)
    if k is None:
        k = sum(1 for ch in chromosomes if ch.is_linear)
    return from_chromosomes(chromosomes, n=n, k=k)


def format_genome(genome: Genome) -> str:
    """One chromosome per line, in standard direction."""
    return "\n".join(str(ch) for ch in genome.decompose())
