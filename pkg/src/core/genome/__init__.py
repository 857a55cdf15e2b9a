"""Genome representation: alternating graphs with standard directions."""

from .models import (
    Adjacency,
    Chromosome,
    ChromosomeShape,
    Extremity,
    ExtremityKind,
    GenomeError,
)
from .genome import CanonicalKey, Genome, canonical_form, decompose, standard_direction
from .builders import (
    format_genome,
    from_chromosomes,
    identity_genome,
    parse_chromosomes,
    parse_genome,
    random_genome,
)

__all__ = [
    "Adjacency",
    "CanonicalKey",
    "Chromosome",
    "ChromosomeShape",
    "Extremity",
    "ExtremityKind",
    "Genome",
    "GenomeError",
    "canonical_form",
    "decompose",
    "format_genome",
    "from_chromosomes",
    "identity_genome",
    "parse_chromosomes",
    "parse_genome",
    "random_genome",
    "standard_direction",
]
