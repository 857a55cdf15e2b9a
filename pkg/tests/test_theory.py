"""Tests for gamma(c), expected tree counts and the Erdős–Rényi sampler."""

import math

import numpy as np
import pytest

from src.config import get_settings
from src.core.theory import (
    GammaConvergenceError,
    TheoryError,
    edge_probability,
    expected_tree_components,
    gamma,
    gamma_closed_form,
    gamma_series,
    gamma_table,
    sample_er_tree_count,
)

SUBCRITICAL = [round(0.05 * i, 2) for i in range(1, 10)]
GRID = [round(0.05 * i, 2) for i in range(1, 61)]


@pytest.fixture
def few_terms(monkeypatch):
    """Settings with a tiny series cap."""
    monkeypatch.setenv("DCJ_GAMMA_MAX_TERMS", "300")
    get_settings.cache_clear()
    yield get_settings()
    monkeypatch.delenv("DCJ_GAMMA_MAX_TERMS")
    get_settings.cache_clear()


class TestGamma:
    """Tests for gamma(c)."""

    @pytest.mark.parametrize("c", SUBCRITICAL)
    def test_identity_below_one_half(self, c):
        """gamma(c) should equal c within 1e-8 on (0, 1/2)."""
        result = gamma(c)
        assert abs(result.value - c) <= 1e-8
        assert result.method == "identity"

    @pytest.mark.parametrize("c", SUBCRITICAL)
    def test_series_agrees_with_identity(self, c):
        """The series should reproduce gamma(c) = c below 1/2."""
        result = gamma_series(c, 1e-10, 1_000_000)
        assert abs(result.value - c) <= 1e-8
        assert result.bound <= 1e-10

    def test_critical_point(self):
        """gamma(1/2) should be 1/2 within 1e-4, also through the slow series."""
        assert abs(gamma(0.5).value - 0.5) <= 1e-4
        result = gamma_series(0.5, 1e-4, 1_000_000)
        assert abs(result.value - 0.5) <= 1e-4

    def test_critical_window_relaxes_tolerance(self):
        """Just above 1/2 the series should converge at the relaxed tolerance."""
        result = gamma(0.5005)
        assert result.converged
        assert result.bound <= get_settings().gamma_critical_tol
        assert abs(result.value - 0.5005) <= 1e-3

    @pytest.mark.parametrize("c", [0.6, 0.75, 1.0, 1.5, 2.0, 3.0, 5.0])
    def test_matches_closed_form(self, c):
        """Above 1/2 the series should match the Lambert-W form."""
        assert gamma(c).value == pytest.approx(gamma_closed_form(c), abs=1e-8)

    def test_known_values(self):
        """gamma(1) and gamma(1.5) should match their known values."""
        assert gamma(1.0).value == pytest.approx(0.8381, abs=1e-3)
        assert gamma(1.5).value == pytest.approx(0.9458, abs=1e-3)

    def test_large_c_tends_to_one(self):
        """gamma(5) should be close to 1 - e^-10."""
        value = gamma(5.0).value
        assert value < 1.0
        assert value == pytest.approx(1.0 - math.exp(-10), abs=1e-4)

    def test_monotone_and_below_c(self):
        """gamma should be non-decreasing, at most c and at most 1 on the grid."""
        values = [r.value for r in gamma_table(GRID)]
        assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))
        assert all(v <= c + 1e-9 and 0.0 <= v <= 1.0 for v, c in zip(values, GRID))
        assert all(v < c for v, c in zip(values, GRID) if c > 1)

    def test_table_keeps_order(self):
        """gamma_table should return one result per c, in order."""
        table = gamma_table([1.0, 0.25, 2.0])
        assert [r.c for r in table] == [1.0, 0.25, 2.0]

    def test_non_convergent_series_raises(self):
        """Hitting the term cap should raise with the partial result attached."""
        with pytest.raises(GammaConvergenceError) as info:
            gamma_series(0.6, 1e-14, 300)
        assert info.value.result.converged is False
        assert info.value.result.terms == 300

    def test_non_convergent_gamma_returns_partial(self, few_terms):
        """gamma should log and return the partial sum instead of raising."""
        result = gamma(0.6, tol=1e-14)
        assert result.converged is False
        assert result.value == pytest.approx(gamma_closed_form(0.6), abs=1e-3)

    @pytest.mark.parametrize("c", [0.0, -1.0])
    def test_rejects_non_positive_c(self, c):
        """Should reject c <= 0."""
        with pytest.raises(TheoryError):
            gamma(c)
        with pytest.raises(TheoryError):
            gamma_closed_form(c)


class TestExpectedTreeComponents:
    """Tests for (1 - gamma(c)) n."""

    def test_subcritical(self):
        """n=1000, c=0.3 should give 700."""
        assert expected_tree_components(1000, 0.3) == pytest.approx(700.0)

    def test_critical(self):
        """n=1000, c=0.5 should give 500 within n * 1e-4."""
        assert abs(expected_tree_components(1000, 0.5) - 500) <= 0.1

    def test_supercritical(self):
        """n=1000, c=1.5 should follow the series."""
        assert expected_tree_components(1000, 1.5) == pytest.approx(
            (1 - gamma(1.5).value) * 1000
        )

    def test_rejects_empty(self):
        """Should reject n < 1."""
        with pytest.raises(TheoryError):
            expected_tree_components(0, 0.3)


class TestEdgeProbability:
    """Tests for the Poissonized edge probability."""

    def test_vanishes_with_c(self):
        """The probability should go to 0 as c does."""
        assert edge_probability(1000, 4, 1e-9) < 1e-11

    @pytest.mark.parametrize("c", [0.1, 0.3, 0.5])
    def test_close_to_two_c_over_n(self, c):
        """At n=1000, k=4 it should be within 1e-5 of 2c/n for c <= 1/2."""
        assert abs(edge_probability(1000, 4, c) - 2 * c / 1000) <= 1e-5

    def test_second_order_gap_at_c_one(self):
        """At c=1 the gap to 2c/n is second order."""
        assert abs(edge_probability(1000, 4, 1.0) - 2e-3) <= 2e-5

    def test_monotone_in_c(self):
        """Larger c should give larger probabilities."""
        values = [edge_probability(300, 4, c) for c in GRID]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_rejects_bad_input(self):
        """Should reject non-positive c and empty genomes."""
        with pytest.raises(TheoryError):
            edge_probability(1000, 4, 0.0)
        with pytest.raises(TheoryError):
            edge_probability(0, 4, 0.3)


class TestErSampler:
    """Tests for the Erdős–Rényi tree counter."""

    def test_empty_graph(self):
        """p_edge = 0 should leave m isolated trees."""
        assert sample_er_tree_count(25, 0.0, np.random.default_rng(0)) == 25

    def test_triangle(self):
        """p_edge = 1 on 3 vertices should give a triangle, no trees."""
        assert sample_er_tree_count(3, 1.0, np.random.default_rng(0)) == 0

    def test_seeded(self):
        """Equal streams should give equal samples."""
        first = sample_er_tree_count(500, 0.002, np.random.default_rng(5))
        second = sample_er_tree_count(500, 0.002, np.random.default_rng(5))
        assert first == second

    def test_mean_matches_theory(self):
        """G(1004, 0.0006) should average within 3 sqrt(1000) of 700 trees."""
        rng = np.random.default_rng(123)
        samples = [sample_er_tree_count(1004, 2 * 0.3 / 1000, rng) for _ in range(100)]
        assert abs(np.mean(samples) - 700) <= 3 * math.sqrt(1000)

    def test_rejects_bad_probability(self):
        """Should reject p_edge outside [0, 1]."""
        with pytest.raises(TheoryError):
            sample_er_tree_count(10, 1.5, np.random.default_rng(0))
