"""Brute-force genome spaces and BFS distances for tiny instances."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional

import networkx as nx

from src.config import get_settings
from src.core.breakpoint import dcj_distance
from src.core.dcj import RestrictedState, neighbors, restricted_state
from src.core.genome import CanonicalKey, Genome, format_genome

logger = logging.getLogger(__name__)


class OracleError(ValueError):
    """Raised when a space is too large or a genome is not part of it."""


def iter_matchings(size: int) -> Iterator[List[int]]:
    """Every perfect matching on vertices 0..size-1 as a mate list."""
    mate = [-1] * size

    def extend() -> Iterator[List[int]]:
        try:
            first = mate.index(-1)
        except ValueError:
            yield list(mate)
            return
        for other in range(first + 1, size):
            if mate[other] == -1:
                mate[first], mate[other] = other, first
                yield from extend()
                mate[first] = mate[other] = -1

    yield from extend()


class GenomeSpace:
    """Canonical classes of G(n, k) joined when one DCJ leads from one to the other.

    The restricted space keeps genomes with at most one circular chromosome and
    every DCJ edge between them.
    """

    def __init__(self, n: int, k: int, restricted: bool, representatives: Dict[CanonicalKey, Genome]):
        self.n = n
        self.k = k
        self.restricted = restricted
        self._representatives = representatives
        self.graph = nx.Graph()
        self.graph.add_nodes_from(representatives)
        self._lengths: Optional[Dict[CanonicalKey, Dict[CanonicalKey, int]]] = None

        for key, genome in representatives.items():
            for neighbor, _ in neighbors(genome, dedupe=True):
                other = neighbor.canonical_form()
                if other != key and other in representatives:
                    self.graph.add_edge(key, other)

    @property
    def classes(self) -> List[CanonicalKey]:
        return list(self._representatives)

    def __len__(self) -> int:
        return len(self._representatives)

    def __contains__(self, genome: Genome) -> bool:
        return genome.canonical_form() in self._representatives

    def representative(self, key: CanonicalKey) -> Genome:
        try:
            return self._representatives[key]
        except KeyError:
            raise OracleError(f"No class {key} in this space")

    def key_of(self, genome: Genome) -> CanonicalKey:
        if genome.n != self.n or genome.k != self.k:
            raise OracleError(
                f"Genome (n={genome.n}, k={genome.k}) is not in G({self.n}, {self.k})"
            )
        key = genome.canonical_form()
        if key not in self._representatives:
            raise OracleError("Genome is not in the restricted space")
        return key

    def all_distances(self) -> Dict[CanonicalKey, Dict[CanonicalKey, int]]:
        if self._lengths is None:
            self._lengths = dict(nx.all_pairs_shortest_path_length(self.graph))
        return self._lengths

    def bfs_distance(self, first: Genome, second: Genome) -> int:
        """Shortest number of DCJ steps between the classes of two genomes."""
        source, target = self.key_of(first), self.key_of(second)
        return nx.shortest_path_length(self.graph, source, target)

    def is_connected(self) -> bool:
        return nx.is_connected(self.graph)

    def diameter(self) -> int:
        return max(max(row.values()) for row in self.all_distances().values())


def enumerate_space(n: int, k: int = 1, restricted: bool = False) -> GenomeSpace:
    """All canonical classes of G(n, k), optionally restricted to at most one circle.

    Raises:
        OracleError: If n exceeds ``oracle_max_n`` or a restricted space has k != 1
    """
    settings = get_settings()
    if n > settings.oracle_max_n:
        raise OracleError(f"n={n} exceeds the oracle limit of {settings.oracle_max_n}")
    if restricted and k != 1:
        raise OracleError(f"Restricted spaces have one linear chromosome, got k={k}")

    representatives: Dict[CanonicalKey, Genome] = {}
    for mate in iter_matchings(2 * (n + k)):
        genome = Genome(n, k, mate)
        if restricted and genome.circular_count > 1:
            continue
        representatives.setdefault(genome.canonical_form(), genome)

    space = GenomeSpace(n, k, restricted, representatives)
    logger.info(
        f"Enumerated {len(space)} classes of G({n}, {k})"
        f"{' restricted' if restricted else ''} with {space.graph.number_of_edges()} DCJ edges"
    )
    return space


def bfs_distance(space: GenomeSpace, first: Genome, second: Genome) -> int:
    return space.bfs_distance(first, second)


TWO_CIRCLE_PAIR = f"{RestrictedState.U_TILDE.value}/{RestrictedState.U_TILDE.value}"


def state_pair(first: Genome, second: Genome) -> str:
    """Restricted states of two genomes as "U/U", "U/U_tilde" or "U_tilde/U_tilde"."""
    states = sorted(
        (restricted_state(first).value, restricted_state(second).value),
        key=lambda state: (state != RestrictedState.U.value, state),
    )
    return "/".join(states)


@dataclass(frozen=True)
class Counterexample:
    """A pair on which the distance formula and BFS disagree."""

    first: str
    second: str
    formula: int
    bfs: Optional[int]
    restricted_bfs: Optional[int] = None
    states: str = ""

    @property
    def is_circle_detour(self) -> bool:
        """Both genomes carry a circle and only the restricted path is longer.

        Such pairs are joined at formula distance only through genomes with two
        circular chromosomes, which the restricted space excludes.
        """
        return (
            self.states == TWO_CIRCLE_PAIR
            and self.bfs == self.formula
            and self.restricted_bfs is not None
            and self.restricted_bfs > self.formula
        )


@dataclass
class CertificationReport:
    """Outcome of an exhaustive comparison over all pairs of classes.

    A restricted report passes when every counterexample is a circle detour;
    any disagreement on a pair with a U genome fails it.
    """

    n: int
    k: int
    restricted: bool
    class_count: int
    pair_count: int = 0
    diameter: int = 0
    counterexamples: List[Counterexample] = field(default_factory=list)
    pairs_by_state: Dict[str, int] = field(default_factory=dict)

    @property
    def failures(self) -> List[Counterexample]:
        if not self.restricted:
            return list(self.counterexamples)
        return [example for example in self.counterexamples if not example.is_circle_detour]

    @property
    def detours(self) -> List[Counterexample]:
        if not self.restricted:
            return []
        return [example for example in self.counterexamples if example.is_circle_detour]

    @property
    def passed(self) -> bool:
        return not self.failures

    def counterexamples_by_state(self) -> Dict[str, int]:
        counts = {states: 0 for states in self.pairs_by_state}
        for example in self.counterexamples:
            counts[example.states] = counts.get(example.states, 0) + 1
        return counts


def certify_distance_formula(n: int, k: int = 1) -> CertificationReport:
    """Compare n - C - P_e/2 with BFS distance on every pair of classes of G(n, k)."""
    space = enumerate_space(n, k)
    lengths = space.all_distances()
    keys = space.classes
    report = CertificationReport(n=n, k=k, restricted=False, class_count=len(keys))

    for i, a in enumerate(keys):
        first = space.representative(a)
        for b in keys[i:]:
            second = space.representative(b)
            bfs = lengths[a].get(b)
            formula = dcj_distance(first, second)
            report.pair_count += 1
            if bfs is not None:
                report.diameter = max(report.diameter, bfs)
            if bfs != formula:
                report.counterexamples.append(
                    Counterexample(format_genome(first), format_genome(second), formula, bfs)
                )

    logger.info(
        f"G({n}, {k}): {report.pair_count} pairs, diameter {report.diameter}, "
        f"{len(report.counterexamples)} counterexamples"
    )
    return report


def certify_restricted_equals_unrestricted(n: int) -> CertificationReport:
    """Check restricted BFS = unrestricted BFS = formula on all pairs of the restricted space.

    Pairs are tallied by restricted state. Disagreements on U_tilde/U_tilde
    pairs where the unrestricted distance still matches the formula are kept as
    circle detours and do not fail the report.
    """
    full = enumerate_space(n, 1)
    restricted = enumerate_space(n, 1, restricted=True)
    full_lengths = full.all_distances()
    restricted_lengths = restricted.all_distances()
    keys = restricted.classes
    report = CertificationReport(n=n, k=1, restricted=True, class_count=len(keys))

    for i, a in enumerate(keys):
        first = restricted.representative(a)
        for b in keys[i:]:
            second = restricted.representative(b)
            states = state_pair(first, second)
            formula = dcj_distance(first, second)
            bfs = full_lengths[a].get(b)
            restricted_bfs = restricted_lengths[a].get(b)
            report.pair_count += 1
            report.pairs_by_state[states] = report.pairs_by_state.get(states, 0) + 1
            if restricted_bfs is not None:
                report.diameter = max(report.diameter, restricted_bfs)
            if not formula == bfs == restricted_bfs:
                report.counterexamples.append(
                    Counterexample(
                        format_genome(first),
                        format_genome(second),
                        formula,
                        bfs,
                        restricted_bfs,
                        states,
                    )
                )

    logger.info(
        f"Restricted n={n}: {report.pair_count} pairs, diameter {report.diameter}, "
        f"{len(report.failures)} failures, {len(report.detours)} circle detours"
    )
    return report
