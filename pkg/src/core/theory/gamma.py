"""The gamma(c) series: fraction of labels outside tree components at time cn."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np
from scipy.special import gammaln, lambertw

from src.config import get_settings

logger = logging.getLogger(__name__)

SQRT_2PI = math.sqrt(2 * math.pi)
CRITICAL_C = 0.5


class TheoryError(ValueError):
    """Raised on invalid analytic parameters."""


@dataclass
class GammaResult:
    """Value of gamma(c) with the number of series terms and a remainder bound."""

    c: float
    value: float
    terms: int
    bound: float
    method: str = "series"
    converged: bool = True


class GammaConvergenceError(RuntimeError):
    """Raised when the series hits its term cap before reaching the tolerance."""

    def __init__(self, result: GammaResult, tol: float):
        self.result = result
        super().__init__(
            f"gamma({result.c}) not within {tol:g} after {result.terms} terms "
            f"(bound {result.bound:.3g})"
        )


def _tail_bound(last_index: int, last_term: float, ratio: float) -> float:
    """Bound on the sum of all terms after ``last_index``.

    Consecutive terms shrink by at least ``ratio`` = 2c e^(1-2c) <= 1, and by
    Stirling every term j is at most j^(-5/2) / sqrt(2 pi).
    """
    polynomial = (2.0 / 3.0) * last_index ** -1.5 / SQRT_2PI
    if ratio < 1.0:
        return min(polynomial, last_term * ratio / (1.0 - ratio))
    return polynomial


def gamma_series(c: float, tol: float, max_terms: int) -> GammaResult:
    """Sum gamma(c) = 1 - (1/2c) sum_j j^(j-2)/j! (2c e^(-2c))^j in log space.

    Terms are evaluated in chunks with ``gammaln`` until the certified
    remainder of gamma drops below ``tol``.

    Raises:
        TheoryError: If c or tol is not positive
        GammaConvergenceError: If ``max_terms`` is reached first
    """
    if c <= 0:
        raise TheoryError(f"c must be positive, got {c}")
    if tol <= 0:
        raise TheoryError(f"tol must be positive, got {tol}")

    log_x = math.log(2 * c) - 2 * c
    ratio = min(1.0, 2 * c * math.exp(1 - 2 * c))
    total = 0.0
    start = 1
    chunk = 256
    while True:
        j = np.arange(start, start + chunk, dtype=float)
        terms = np.exp((j - 2) * np.log(j) - gammaln(j + 1) + j * log_x)
        total += float(terms.sum())
        last_index = start + chunk - 1
        bound = _tail_bound(last_index, float(terms[-1]), ratio) / (2 * c)
        value = min(1.0, max(0.0, 1.0 - total / (2 * c)))
        if bound <= tol:
            logger.debug(f"gamma({c}) converged after {last_index} terms (bound {bound:.3g})")
            return GammaResult(c, value, last_index, bound)
        if last_index >= max_terms:
            raise GammaConvergenceError(
                GammaResult(c, value, last_index, bound, converged=False), tol
            )
        start = last_index + 1
        chunk = min(chunk * 2, max_terms - last_index)


def gamma(c: float, tol: Optional[float] = None) -> GammaResult:
    """gamma(c), using the identity gamma(c) = c on (0, 1/2] and the series above it.

    Within ``gamma_critical_window`` of 1/2 the tolerance is relaxed to
    ``gamma_critical_tol``; a series that still does not converge is logged
    and returned with ``converged=False``.
    """
    if c <= 0:
        raise TheoryError(f"c must be positive, got {c}")
    if c <= CRITICAL_C:
        return GammaResult(c, c, 0, 0.0, method="identity")

    settings = get_settings()
    if tol is None:
        tol = settings.gamma_tol
    if abs(c - CRITICAL_C) <= settings.gamma_critical_window:
        tol = max(tol, settings.gamma_critical_tol)
    try:
        return gamma_series(c, tol, settings.gamma_max_terms)
    except GammaConvergenceError as e:
        logger.warning(str(e))
        return e.result


def gamma_closed_form(c: float) -> float:
    """gamma(c) through the tree function T(x) = -W0(-x).

    sum_j j^(j-2)/j! x^j = T - T^2/2 with x = 2c e^(-2c).
    """
    if c <= 0:
        raise TheoryError(f"c must be positive, got {c}")
    x = 2 * c * math.exp(-2 * c)
    tree = float(-lambertw(-x, 0).real)
    return 1.0 - (tree - tree * tree / 2) / (2 * c)


def gamma_table(values: Sequence[float], tol: Optional[float] = None) -> List[GammaResult]:
    """gamma for each c in ``values``, in order."""
    return [gamma(c, tol) for c in values]


def expected_tree_components(n: int, c: float) -> float:
    """(1 - gamma(c)) n."""
    if n < 1:
        raise TheoryError(f"n must be at least 1, got {n}")
    return (1.0 - gamma(c).value) * n


def edge_probability(n: int, k: int, c: float) -> float:
    """Probability that a given label pair is joined in Z by time cn.

    1 - exp(-2cn / ((n+k)(n+k-1))), which is 2c/n + O(n^-2).
    """
    if n < 1 or k < 0:
        raise TheoryError(f"Invalid sizes n={n}, k={k}")
    if c <= 0:
        raise TheoryError(f"c must be positive, got {c}")
    m = n + k
    if m < 2:
        return 0.0
    return float(-np.expm1(-2 * c * n / (m * (m - 1))))
