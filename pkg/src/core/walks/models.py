"""Walk configuration, per-jump events, trajectory state and sample records."""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

from src.core.breakpoint import Alpha
from src.core.dcj import JoinType
from src.core.estimator import LabelGraph, Labeling
from src.core.genome import Genome, identity_genome, parse_genome


class WalkError(ValueError):
    """Raised on invalid walk configurations or states outside the model."""


class WalkModel(str, Enum):
    """Which DCJ process to simulate."""

    UNRESTRICTED = "unrestricted"
    RESTRICTED = "restricted"

    def description(self) -> str:
        descriptions = {
            self.UNRESTRICTED: "Uniform adjacency pairs on G(n, k), delta1 with probability p",
            self.RESTRICTED: "One linear chromosome; a circle is reabsorbed at the next jump",
        }
        return descriptions.get(self, "Unknown model")


class TimeMode(str, Enum):
    """Jump times: i-th jump at time i, or a rate-1 Poisson process."""

    DISCRETE = "discrete"
    POISSON = "poisson"


class PSchedule(BaseModel):
    """Piecewise-constant delta1 probability.

    Each segment ``(start, p)`` sets p from time ``start * n`` on; starts are in
    the same units as checkpoints. The first segment starts at 0.
    """

    segments: List[Tuple[float, float]] = Field(default_factory=lambda: [(0.0, 0.5)])

    @model_validator(mode="after")
    def validate_segments(self):
        if not self.segments:
            raise ValueError("schedule needs at least one segment")
        starts = [start for start, _ in self.segments]
        if starts[0] != 0.0:
            raise ValueError("first schedule segment must start at 0")
        if any(b <= a for a, b in zip(starts, starts[1:])):
            raise ValueError("schedule thresholds must be strictly increasing")
        for _, p in self.segments:
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"p must lie in [0, 1], got {p}")
        return self

    @classmethod
    def constant(cls, p: float) -> "PSchedule":
        return cls(segments=[(0.0, p)])

    @classmethod
    def parse(cls, text: str) -> "PSchedule":
        """``0.5`` for a constant, ``0:1,0.5:0`` for thresholds."""
        text = text.strip()
        if ":" not in text:
            return cls.constant(float(text))
        segments = []
        for part in text.split(","):
            start, p = part.split(":")
            segments.append((float(start), float(p)))
        return cls(segments=segments)

    @property
    def is_constant(self) -> bool:
        return len(self.segments) == 1

    def value_at(self, c: float) -> float:
        """p in effect at time c * n."""
        starts = [start for start, _ in self.segments]
        index = bisect.bisect_right(starts, c) - 1
        return self.segments[max(index, 0)][1]

    def describe(self) -> str:
        if self.is_constant:
            return f"{self.segments[0][1]:g}"
        return ",".join(f"{start:g}:{p:g}" for start, p in self.segments)


class WalkConfig(BaseModel):
    """One trajectory: model, initial genome, schedule, checkpoints and RNG stream."""

    model: WalkModel = WalkModel.UNRESTRICTED
    sizes: List[int] = Field(default_factory=lambda: [100])
    schedule: PSchedule = Field(default_factory=PSchedule)
    checkpoints: List[float] = Field(default_factory=lambda: [0.5])
    time_mode: TimeMode = TimeMode.DISCRETE
    seed: int = Field(0, ge=0)
    replicate: int = Field(0, ge=0)
    track_components: bool = False
    check_invariants: bool = False
    keep_events: bool = False
    initial_genome: Optional[str] = Field(None, description="Genome text; overrides sizes")

    @field_validator("sizes")
    @classmethod
    def validate_sizes(cls, v: List[int]) -> List[int]:
        if not v:
            raise ValueError("at least one chromosome size is required")
        if any(s <= 0 for s in v):
            raise ValueError("chromosome sizes must be positive")
        return v

    @field_validator("checkpoints")
    @classmethod
    def validate_checkpoints(cls, v: List[float]) -> List[float]:
        if not v:
            raise ValueError("at least one checkpoint is required")
        if any(c < 0 for c in v):
            raise ValueError("checkpoints must be non-negative")
        if any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError("checkpoints must be strictly increasing")
        return v

    @model_validator(mode="after")
    def validate_model(self):
        genome = self.initial()
        if genome.size < 2:
            raise ValueError("walks need at least two adjacencies")
        if self.model == WalkModel.RESTRICTED:
            if genome.k != 1:
                raise ValueError("restricted walks need exactly one linear chromosome")
            if genome.circular_count:
                raise ValueError("restricted walks start without circular chromosomes")
        return self

    def initial(self) -> Genome:
        """Starting genome: parsed text if given, else the identity of ``sizes``."""
        if self.initial_genome is not None:
            return parse_genome(self.initial_genome)
        return identity_genome(self.sizes)

    @property
    def horizon(self) -> float:
        return self.checkpoints[-1]


@dataclass(frozen=True)
class MoveEvent:
    """One jump: time, labels of the two cut adjacencies, join and its effect."""

    index: int
    time: float
    labels: Tuple[int, int]
    join: JoinType
    alpha: Optional[Alpha] = None
    fragmented: bool = False


@dataclass
class WalkDiagnostics:
    """Per-trajectory tallies, filled when component tracking is on."""

    fragmentation_events: int = 0
    merges: int = 0
    splits: int = 0
    up: int = 0
    neutral: int = 0
    down: int = 0
    running_distance: Optional[int] = None


@dataclass
class WalkState:
    """Current genome with its labeling, label graph and random stream."""

    reference: Genome
    genome: Genome
    labeling: Labeling
    label_graph: LabelGraph
    rng: np.random.Generator
    steps: int = 0
    clock: float = 0.0
    track_components: bool = False
    keep_events: bool = False
    diagnostics: WalkDiagnostics = field(default_factory=WalkDiagnostics)
    events: List[MoveEvent] = field(default_factory=list)


CSV_COLUMNS = [
    "model",
    "n",
    "k",
    "p",
    "seed",
    "replicate",
    "c",
    "t",
    "jumps",
    "distance",
    "estimate_raw",
    "estimate",
    "fragmentation_events",
]


def _fmt(value: float) -> str:
    return f"{value:.6g}"


def _fmt_exact(value: float) -> str:
    """Shortest text that reads back as ``value``; whole numbers lose the ".0"."""
    text = repr(float(value))
    return text[:-2] if text.endswith(".0") else text


@dataclass(frozen=True)
class SampleRecord:
    """One checkpoint of one replicate."""

    model: str
    n: int
    k: int
    p: str
    seed: int
    replicate: int
    c: float
    t: float
    jumps: int
    distance: int
    estimate_raw: int
    estimate: int
    fragmentation_events: Optional[int] = None

    def to_row(self) -> List[str]:
        return [
            self.model,
            str(self.n),
            str(self.k),
            self.p,
            str(self.seed),
            str(self.replicate),
            _fmt_exact(self.c),
            _fmt(self.t),
            str(self.jumps),
            str(self.distance),
            str(self.estimate_raw),
            str(self.estimate),
            "" if self.fragmentation_events is None else str(self.fragmentation_events),
        ]
