"""Experiment configuration and summary types."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from src.core.walks import PSchedule, TimeMode, WalkConfig, WalkModel

logger = logging.getLogger(__name__)


class SummaryError(ValueError):
    """Raised on malformed sample CSV input."""


class ExperimentConfig(BaseModel):
    """A batch of replicates per p value.

    Mirrors the ``simulate`` flags; a JSON file with the same keys provides
    defaults and flags override it.
    """

    model: WalkModel = WalkModel.UNRESTRICTED
    n: Optional[int] = Field(None, ge=1, description="Single-chromosome size when sizes is omitted")
    sizes: Optional[List[int]] = None
    p_values: List[float] = Field(default_factory=lambda: [0.5])
    p_schedule: Optional[str] = Field(None, description="t1:p1,t2:p2,... overrides p_values")
    reps: int = Field(10, ge=0)
    checkpoints: List[float] = Field(default_factory=lambda: [0.1, 0.25, 0.5, 1.0])
    seed: int = Field(0, ge=0)
    time_mode: TimeMode = TimeMode.DISCRETE
    track_components: bool = False
    check_invariants: bool = False
    genome: Optional[str] = Field(None, description="Initial genome text")

    @field_validator("p_values")
    @classmethod
    def validate_p_values(cls, v: List[float]) -> List[float]:
        if not v:
            raise ValueError("at least one p value is required")
        for p in v:
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"p must lie in [0, 1], got {p}")
        return v

    @model_validator(mode="after")
    def validate_sizes(self):
        if self.sizes is not None and self.n is not None and sum(self.sizes) != self.n:
            raise ValueError(f"sizes sum to {sum(self.sizes)}, not n={self.n}")
        if self.p_schedule is not None:
            PSchedule.parse(self.p_schedule)
        # Surface walk-level errors (restricted with several chromosomes, bad
        # checkpoints) at load time.
        self.walk_configs(limit=1)
        return self

    @classmethod
    def from_file(cls, path: Path, **overrides: Any) -> "ExperimentConfig":
        """Load a JSON config; keyword overrides that are not None win."""
        try:
            data: Dict[str, Any] = json.loads(Path(path).read_text())
        except json.JSONDecodeError as e:
            raise ValueError(f"Config {path} is not valid JSON: {e}")
        if not isinstance(data, dict):
            raise ValueError(f"Config {path} must hold a JSON object")
        data.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**data)

    @property
    def chromosome_sizes(self) -> List[int]:
        if self.sizes is not None:
            return self.sizes
        return [self.n if self.n is not None else 100]

    def schedules(self) -> List[PSchedule]:
        if self.p_schedule is not None:
            return [PSchedule.parse(self.p_schedule)]
        return [PSchedule.constant(p) for p in self.p_values]

    def walk_configs(self, limit: Optional[int] = None) -> List[WalkConfig]:
        """One WalkConfig per (p value, replicate), in that order."""
        configs: List[WalkConfig] = []
        for schedule in self.schedules():
            for replicate in range(self.reps):
                if limit is not None and len(configs) >= limit:
                    return configs
                configs.append(
                    WalkConfig(
                        model=self.model,
                        sizes=self.chromosome_sizes,
                        schedule=schedule,
                        checkpoints=self.checkpoints,
                        time_mode=self.time_mode,
                        seed=self.seed,
                        replicate=replicate,
                        track_components=self.track_components,
                        check_invariants=self.check_invariants,
                        initial_genome=self.genome,
                    )
                )
        return configs


@dataclass
class SummaryRow:
    """Aggregates of one (model, p, c) group."""

    model: str
    p: str
    c: float
    n: int
    replicates: int
    mean_distance: float
    std_distance: float
    mean_estimate: float
    escaped: bool = False

    @property
    def parsimony(self) -> float:
        """c * n, the distance if every jump counted."""
        return self.c * self.n


@dataclass
class Summary:
    """Summary rows plus the escape point per (model, p)."""

    rows: List[SummaryRow] = field(default_factory=list)
    escape_points: Dict[tuple, Optional[float]] = field(default_factory=dict)
    epsilon: float = 0.05
