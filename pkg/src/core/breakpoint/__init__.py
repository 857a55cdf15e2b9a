"""Breakpoint graphs and the exact DCJ distance."""

from .models import Alpha, BpComponent, BreakpointError, ComponentKind, LineEnds, MoveEffect
from .graph import (
    BreakpointGraph,
    build,
    census_text,
    dcj_distance,
    large_cycle_count,
    move_effect,
    path_parity_census,
    predict_alpha,
    translate_move,
)

__all__ = [
    "Alpha",
    "BpComponent",
    "BreakpointError",
    "BreakpointGraph",
    "ComponentKind",
    "LineEnds",
    "MoveEffect",
    "build",
    "census_text",
    "dcj_distance",
    "large_cycle_count",
    "move_effect",
    "path_parity_census",
    "predict_alpha",
    "translate_move",
]
