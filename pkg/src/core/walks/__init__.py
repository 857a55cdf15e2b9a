"""DCJ random walks on G(n, k) and on the restricted space."""

from .models import (
    CSV_COLUMNS,
    MoveEvent,
    PSchedule,
    SampleRecord,
    TimeMode,
    WalkConfig,
    WalkDiagnostics,
    WalkError,
    WalkModel,
    WalkState,
)
from .rng import make_rng
from .process import (
    STEPS,
    check_state,
    jump_times,
    run,
    start_state,
    step_restricted,
    step_unrestricted,
)

__all__ = [
    "CSV_COLUMNS",
    "MoveEvent",
    "PSchedule",
    "STEPS",
    "SampleRecord",
    "TimeMode",
    "WalkConfig",
    "WalkDiagnostics",
    "WalkError",
    "WalkModel",
    "WalkState",
    "check_state",
    "jump_times",
    "make_rng",
    "run",
    "start_state",
    "step_restricted",
    "step_unrestricted",
]
