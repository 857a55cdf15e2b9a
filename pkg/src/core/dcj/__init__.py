"""DCJ operations."""

from .models import DcjError, DcjMove, JoinType, RestrictedState
from .operations import apply_dcj, neighbors, restricted_state

__all__ = [
    "DcjError",
    "DcjMove",
    "JoinType",
    "RestrictedState",
    "apply_dcj",
    "neighbors",
    "restricted_state",
]
