"""Exhaustive ground truth for tiny genome spaces."""

from .space import (
    CertificationReport,
    Counterexample,
    GenomeSpace,
    OracleError,
    TWO_CIRCLE_PAIR,
    bfs_distance,
    certify_distance_formula,
    certify_restricted_equals_unrestricted,
    enumerate_space,
    iter_matchings,
    state_pair,
)

__all__ = [
    "CertificationReport",
    "Counterexample",
    "GenomeSpace",
    "OracleError",
    "TWO_CIRCLE_PAIR",
    "bfs_distance",
    "certify_distance_formula",
    "certify_restricted_equals_unrestricted",
    "enumerate_space",
    "iter_matchings",
    "state_pair",
]
