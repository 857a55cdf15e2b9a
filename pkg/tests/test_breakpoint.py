"""Tests for breakpoint graphs, the DCJ distance and the alpha table."""

import math

import numpy as np
import pytest

from src.core.breakpoint import (
    Alpha,
    BreakpointError,
    LineEnds,
    build,
    census_text,
    dcj_distance,
    large_cycle_count,
    move_effect,
    path_parity_census,
    predict_alpha,
    translate_move,
)
from src.core.dcj import DcjMove, JoinType, apply_dcj
from src.core.genome import Genome, identity_genome, parse_genome, random_genome


def random_pair(rng, max_n=30, max_k=3):
    n = int(rng.integers(1, max_n + 1))
    k = int(rng.integers(1, max_k + 1))
    return random_genome(n, k, rng), random_genome(n, k, rng)


def random_adjacencies(genome, rng):
    pairs = list(genome.oriented_pairs())
    i, j = rng.choice(len(pairs), size=2, replace=False)
    return pairs[i], pairs[j]


def relabel_extremities(genome, flipped_genes):
    """Same genome with the tail and head ids of some genes exchanged."""
    perm = list(range(genome.vertex_count))
    for gene in flipped_genes:
        tail = 2 * (gene - 1)
        perm[tail], perm[tail + 1] = tail + 1, tail
    mate = [0] * genome.vertex_count
    for v in range(genome.vertex_count):
        mate[perm[v]] = perm[genome.mate(v)]
    return Genome(genome.n, genome.k, mate)


class TestBuild:
    """Tests for breakpoint graph construction."""

    def test_identical_genomes(self):
        """build(G, G) should give n-k one-edge cycles and 2k even lines."""
        genome = identity_genome([3, 2, 4])
        bp = build(genome, genome)
        assert bp.cycle_count == 9 - 3
        assert all(c.black_edges == 1 for c in bp.cycles)
        assert len(bp.lines) == 6
        assert all(line.ends == LineEnds.TT_PRIME and line.is_even for line in bp.lines)
        assert path_parity_census(bp) == (6, 0, 0)

    def test_single_gene_flip(self):
        """[L: 1] against [L: -1] should give no cycles and two even TT' lines."""
        bp = build(parse_genome("L: 1"), parse_genome("L: -1"))
        assert bp.cycle_count == 0
        assert [line.ends for line in bp.lines] == [LineEnds.TT_PRIME, LineEnds.TT_PRIME]
        assert bp.even_line_count == 2

    def test_circle_excision_census(self):
        """[L: 1] against null plus [C: 1] should hold one odd TT and one odd T'T' line."""
        bp = build(parse_genome("L: 1"), parse_genome("L:\nC: 1"))
        assert path_parity_census(bp) == (0, 1, 1)
        assert census_text(bp) == "line TT ℓ=3\nline T′T′ ℓ=1"

    def test_census_text_of_identity(self):
        """Should list lines first, then cycles."""
        genome = parse_genome("L: 1 2")
        assert census_text(build(genome, genome)) == "line TT′ ℓ=2\nline TT′ ℓ=2\ncycle ℓ=1"

    def test_rejects_size_mismatch(self):
        """Should reject genomes of different n or k."""
        with pytest.raises(BreakpointError):
            build(parse_genome("L: 1 2"), parse_genome("L: 1\nL: 2"))
        with pytest.raises(BreakpointError):
            dcj_distance(parse_genome("L: 1"), parse_genome("L: 1 2"))

    def test_random_structure(self):
        """Random pairs should have 2k lines, TT' exactly when even, n+k black edges over the components."""
        rng = np.random.default_rng(21)
        for _ in range(1000):
            first, second = random_pair(rng)
            bp = build(first, second)
            lines = bp.lines
            assert len(lines) == 2 * first.k
            assert all((line.ends == LineEnds.TT_PRIME) == line.is_even for line in lines)
            nulls = sum(1 for chromosome in first.decompose() if chromosome.is_null)
            without_black = [c for c in bp.components if c.black_edges == 0]
            assert len(without_black) == nulls
            assert len(bp.components) - nulls <= first.n + first.k
            assert sum(path_parity_census(bp)) == 2 * first.k
            assert bp.even_line_count % 2 == 0
            assert sum(c.black_edges for c in bp.components) == first.n + first.k

    def test_reference_null_chromosomes_are_gray_only_lines(self):
        """Each null chromosome of the reference should be a TT line without black edges."""
        first = parse_genome("L:\nL:\nL:\nC: 1")
        second = parse_genome("L: 1\nL:\nL:")
        bp = build(first, second)
        without_black = [c for c in bp.components if c.black_edges == 0]
        assert len(without_black) == 3
        assert all(c.ends == LineEnds.TT and c.edge_count == 1 for c in without_black)
        assert len(bp.components) > first.n + first.k
        assert len(bp.components) - len(without_black) <= first.n + first.k

    def test_large_cycle_bound(self):
        """Fewer than sqrt(n+k) cycles should exceed 2 sqrt(n+k) black edges."""
        rng = np.random.default_rng(8)
        for _ in range(300):
            first, second = random_pair(rng, max_n=60)
            bp = build(first, second)
            assert large_cycle_count(bp) < math.sqrt(first.n + first.k)
        genome = identity_genome([4])
        assert large_cycle_count(build(genome, genome), threshold=0) == 3


class TestDcjDistance:
    """Tests for n - C - P_e/2."""

    def test_zero_on_identical(self):
        """d(G, G) should be 0."""
        rng = np.random.default_rng(1)
        for _ in range(100):
            genome = random_genome(10, 2, rng)
            assert dcj_distance(genome, genome) == 0

    def test_flip_has_zero_distance(self):
        """d([L: 1], [L: -1]) should be 0."""
        assert dcj_distance(parse_genome("L: 1"), parse_genome("L: -1")) == 0

    def test_circle_excision(self):
        """d([L: 1], null plus [C: 1]) should be 1."""
        assert dcj_distance(parse_genome("L: 1"), parse_genome("L:\nC: 1")) == 1

    def test_symmetric_and_non_negative(self):
        """d should be symmetric and non-negative."""
        rng = np.random.default_rng(13)
        for _ in range(300):
            first, second = random_pair(rng)
            d = dcj_distance(first, second)
            assert d >= 0
            assert d == dcj_distance(second, first)

    def test_extremity_order_does_not_matter(self):
        """Exchanging tail and head ids of some genes in both genomes should keep d."""
        rng = np.random.default_rng(17)
        for _ in range(300):
            first, second = random_pair(rng, max_n=15)
            genes = [g for g in range(1, first.n + 1) if rng.random() < 0.5]
            assert dcj_distance(
                relabel_extremities(first, genes), relabel_extremities(second, genes)
            ) == dcj_distance(first, second)


class TestPredictAlpha:
    """Tests for the alpha case table."""

    def test_two_cycles_merge(self):
        """Edges in two different cycles should give +1 for either join."""
        genome = parse_genome("L: 1 2 3")
        bp = build(genome, genome)
        e, eprime = bp.black_edge(1), bp.black_edge(3)
        assert e == (1, 2) and eprime == (3, 4)
        assert predict_alpha(bp, e, eprime, JoinType.DELTA1) == Alpha.UP
        assert predict_alpha(bp, e, eprime, JoinType.DELTA2) == Alpha.UP

    def test_same_cycle(self):
        """Edges in one cycle should give 0 for delta1 and -1 for delta2."""
        bp = build(parse_genome("L: 1 2 3"), parse_genome("L: 1 -2 3"))
        e, eprime = bp.black_edge(1), bp.black_edge(2)
        assert e == (1, 3) and eprime == (4, 2)
        assert predict_alpha(bp, e, eprime, JoinType.DELTA1) == Alpha.NEUTRAL
        assert predict_alpha(bp, e, eprime, JoinType.DELTA2) == Alpha.DOWN

    def test_two_even_lines(self):
        """Edges in two even TT' lines should give +1 for delta1 and 0 for delta2."""
        genome = parse_genome("L: 1")
        bp = build(genome, genome)
        e, eprime = bp.black_edge(0), bp.black_edge(1)
        assert e == (0, 4) and eprime == (1, 5)
        assert predict_alpha(bp, e, eprime, JoinType.DELTA1) == Alpha.UP
        assert predict_alpha(bp, e, eprime, JoinType.DELTA2) == Alpha.NEUTRAL

    def test_odd_tt_with_odd_primes(self):
        """An odd TT line with an odd T'T' line should give -1 for either join."""
        bp = build(parse_genome("L: 1"), parse_genome("L:\nC: 1"))
        tt_edge = bp.black_edge(0)
        prime_edge = bp.black_edge(4)
        for join in JoinType:
            assert predict_alpha(bp, tt_edge, prime_edge, join) == Alpha.DOWN

    def test_rejects_edges_against_natural_direction(self):
        """Should reject black edges given against the natural direction."""
        genome = parse_genome("L: 1 2 3")
        bp = build(genome, genome)
        with pytest.raises(BreakpointError):
            predict_alpha(bp, (2, 1), (3, 4), JoinType.DELTA1)
        with pytest.raises(BreakpointError):
            predict_alpha(bp, (1, 2), (1, 2), JoinType.DELTA1)

    def test_natural_moves_match_distance_change(self):
        """Natural-direction moves should change d by exactly the predicted alpha."""
        rng = np.random.default_rng(2024)
        for _ in range(5000):
            reference, genome = random_pair(rng)
            bp = build(reference, genome)
            u, v = random_adjacencies(genome, rng)
            e = bp.black_edge(bp.to_bp(u[0]))
            eprime = bp.black_edge(bp.to_bp(v[0]))
            join = JoinType.DELTA1 if rng.random() < 0.5 else JoinType.DELTA2
            move = DcjMove(
                (bp.from_bp(e[0]), bp.from_bp(e[1])),
                (bp.from_bp(eprime[0]), bp.from_bp(eprime[1])),
                join,
            )
            after = dcj_distance(reference, apply_dcj(genome, move))
            assert after - bp.distance() == predict_alpha(bp, e, eprime, join)

    def test_standard_moves_match_distance_change(self):
        """Moves in the genome's standard orientation should match after translation."""
        rng = np.random.default_rng(99)
        for _ in range(5000):
            reference, genome = random_pair(rng)
            bp = build(reference, genome)
            e, eprime = random_adjacencies(genome, rng)
            join = JoinType.DELTA1 if rng.random() < 0.5 else JoinType.DELTA2
            move = DcjMove(e, eprime, join)
            effect = move_effect(bp, move)
            after = dcj_distance(reference, apply_dcj(genome, move))
            assert after - bp.distance() == effect.alpha
            assert effect.alpha in (Alpha.DOWN, Alpha.NEUTRAL, Alpha.UP)


class TestMoveEffect:
    """Tests for merge, split and fragment size."""

    def test_translation_flips_join_on_one_reversed_edge(self):
        """A move against the natural direction on one edge should flip its join."""
        genome = parse_genome("L: 1")
        bp = build(genome, genome)
        natural = translate_move(bp, DcjMove((2, 0), (1, 3), JoinType.DELTA1))
        assert natural.e == (0, 4) and natural.eprime == (1, 5)
        assert natural.join is JoinType.DELTA2

    def test_split_of_cycle(self):
        """delta2 inside a two-edge cycle should split it into one-edge pieces."""
        bp = build(parse_genome("L: 1 2 3"), parse_genome("L: 1 -2 3"))
        effect = bp.move_effect(DcjMove((1, 3), (4, 2), JoinType.DELTA2))
        assert effect.alpha == Alpha.DOWN
        assert effect.split and not effect.merged
        assert effect.fragment_size == 1

    def test_merge_of_cycles(self):
        """A move across two cycles should merge them."""
        genome = parse_genome("L: 1 2 3")
        effect = build(genome, genome).move_effect(DcjMove((1, 2), (3, 4), JoinType.DELTA1))
        assert effect.merged and not effect.split
        assert effect.fragment_size is None

    def test_rejects_missing_adjacency(self):
        """Should reject moves on edges that the genome does not hold."""
        genome = parse_genome("L: 1 2")
        with pytest.raises(BreakpointError):
            translate_move(build(genome, genome), DcjMove((0, 1), (2, 3), JoinType.DELTA1))
