"""The unrestricted and restricted DCJ processes."""

from __future__ import annotations

import logging
import math
import time
from typing import List, Optional, Tuple

import numpy as np

from src.config import get_settings
from src.core.breakpoint import Alpha, build, dcj_distance
from src.core.dcj import DcjMove, JoinType, RestrictedState, apply_dcj, restricted_state
from src.core.estimator import (
    LabelGraph,
    distance_estimate,
    init_labeling,
    record_pair,
    update_labeling,
)
from src.core.genome import Genome, GenomeError
from .models import (
    MoveEvent,
    SampleRecord,
    TimeMode,
    WalkConfig,
    WalkDiagnostics,
    WalkError,
    WalkModel,
    WalkState,
)
from .rng import make_rng

logger = logging.getLogger(__name__)

# Slack when comparing jump times against checkpoint times c * n.
TIME_EPS = 1e-9


def start_state(
    genome: Genome,
    rng: np.random.Generator,
    track_components: bool = False,
    keep_events: bool = False,
) -> WalkState:
    """Fresh trajectory from ``genome``: initial labeling and an empty label graph."""
    diagnostics = WalkDiagnostics(running_distance=0 if track_components else None)
    return WalkState(
        reference=genome.copy(),
        genome=genome.copy(),
        labeling=init_labeling(genome),
        label_graph=LabelGraph(genome.size),
        rng=rng,
        track_components=track_components,
        keep_events=keep_events,
        diagnostics=diagnostics,
    )


def jump_times(
    horizon: float,
    rng: np.random.Generator,
    mode: TimeMode = TimeMode.POISSON,
    rate: float = 1.0,
) -> np.ndarray:
    """Increasing jump times in (0, horizon].

    Poisson mode draws exponential(1/rate) gaps; discrete mode puts the i-th
    jump at time i.
    """
    if horizon < 0:
        raise WalkError(f"Horizon must be non-negative, got {horizon}")
    if mode == TimeMode.DISCRETE:
        return np.arange(1, math.floor(horizon + TIME_EPS) + 1, dtype=float)

    if rate <= 0:
        raise WalkError(f"Rate must be positive, got {rate}")
    chunks = []
    elapsed = 0.0
    size = max(16, int(horizon * rate * 1.1) + 16)
    while True:
        times = elapsed + np.cumsum(rng.exponential(1.0 / rate, size))
        inside = times[times <= horizon]
        chunks.append(inside)
        if len(inside) < size:
            break
        elapsed = float(times[-1])
    return np.concatenate(chunks) if chunks else np.empty(0)


def _apply(state: WalkState, move: DcjMove, when: float) -> MoveEvent:
    genome = state.genome
    diagnostics = state.diagnostics

    effect = None
    if state.track_components:
        effect = build(state.reference, genome).move_effect(move)

    labels = (
        state.labeling.label_of_edge(move.e),
        state.labeling.label_of_edge(move.eprime),
    )
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug(f"Jump {state.steps + 1}: {move.describe(genome)}")
    record_pair(state.label_graph, *labels)
    apply_dcj(genome, move, in_place=True)
    update_labeling(state.labeling, move)
    state.steps += 1
    state.clock = when

    fragmented = False
    if effect is not None:
        if diagnostics.running_distance is not None:
            diagnostics.running_distance += int(effect.alpha)
        diagnostics.merges += int(effect.merged)
        diagnostics.splits += int(effect.split)
        if effect.alpha == Alpha.UP:
            diagnostics.up += 1
        elif effect.alpha == Alpha.DOWN:
            diagnostics.down += 1
        else:
            diagnostics.neutral += 1
        threshold = 2 * math.sqrt(genome.size)
        if effect.split and effect.fragment_size <= threshold:
            diagnostics.fragmentation_events += 1
            fragmented = True

    event = MoveEvent(
        index=state.steps,
        time=when,
        labels=labels,
        join=move.join,
        alpha=effect.alpha if effect is not None else None,
        fragmented=fragmented,
    )
    if state.keep_events:
        state.events.append(event)
    return event


def _uniform_pair(genome: Genome, rng: np.random.Generator) -> Tuple[int, int]:
    """Vertices of two distinct adjacencies, uniform over unordered pairs."""
    if genome.size < 2:
        raise WalkError("A DCJ needs two adjacencies")
    count = genome.vertex_count
    u = int(rng.integers(count))
    partner = genome.mate(u)
    while True:
        v = int(rng.integers(count))
        if v != u and v != partner:
            return u, v


def step_unrestricted(
    state: WalkState,
    p: float,
    rng: Optional[np.random.Generator] = None,
    when: Optional[float] = None,
) -> Tuple[WalkState, MoveEvent]:
    """One jump of the unrestricted process.

    A uniformly random pair of distinct adjacencies is cut and rejoined by
    delta1 with probability p, otherwise by delta2.
    """
    rng = rng if rng is not None else state.rng
    u, v = _uniform_pair(state.genome, rng)
    join = JoinType.DELTA1 if rng.random() < p else JoinType.DELTA2
    move = DcjMove.standard(state.genome, u, v, join)
    when = float(state.steps + 1) if when is None else when
    return state, _apply(state, move, when)


def step_restricted(
    state: WalkState,
    p: float,
    rng: Optional[np.random.Generator] = None,
    when: Optional[float] = None,
) -> Tuple[WalkState, MoveEvent]:
    """One jump of the restricted process.

    In U the step is an unrestricted one (reversal with probability p, circle
    excision otherwise). In U_tilde one adjacency of the circle and one of the
    linear chromosome are cut and rejoined with a fair coin, which always
    reabsorbs the circle.
    """
    rng = rng if rng is not None else state.rng
    genome = state.genome
    where = restricted_state(genome)
    if where == RestrictedState.U:
        u, v = _uniform_pair(genome, rng)
        join = JoinType.DELTA1 if rng.random() < p else JoinType.DELTA2
    elif where == RestrictedState.U_TILDE:
        circle = genome.circular_components()[0]
        line = genome.linear_components()[0]
        u = circle[2 * int(rng.integers(len(circle) // 2))]
        v = line[2 * int(rng.integers(len(line) // 2))]
        join = JoinType.DELTA1 if rng.random() < 0.5 else JoinType.DELTA2
    else:
        raise WalkError(f"Restricted walk left U and U_tilde ({genome.circular_count} circles)")

    move = DcjMove.standard(genome, u, v, join)
    when = float(state.steps + 1) if when is None else when
    return state, _apply(state, move, when)


STEPS = {
    WalkModel.UNRESTRICTED: step_unrestricted,
    WalkModel.RESTRICTED: step_restricted,
}


def check_state(state: WalkState, model: WalkModel) -> None:
    """Raise WalkError unless genome, labeling and label graph are consistent."""
    try:
        state.genome.validate()
    except GenomeError as e:
        raise WalkError(f"Invalid genome after {state.steps} jumps: {e}")
    if not state.labeling.is_bijective(state.genome):
        raise WalkError(f"Labeling is not a bijection after {state.steps} jumps")
    if state.label_graph.recount_trees() != state.label_graph.tree_count:
        raise WalkError("Incremental tree count disagrees with a full recount")
    if state.label_graph.edge_count > state.steps:
        raise WalkError("Label graph has more edges than jumps")
    if model == WalkModel.RESTRICTED and restricted_state(state.genome) == RestrictedState.OTHER:
        raise WalkError(f"Restricted walk holds {state.genome.circular_count} circles")


def run(config: WalkConfig) -> List[SampleRecord]:
    """Simulate one trajectory and sample it at every checkpoint.

    Args:
        config: Walk configuration

    Returns:
        One record per checkpoint, in checkpoint order
    """
    settings = get_settings()
    started = time.perf_counter()

    genome = config.initial()
    n, k = genome.n, genome.k
    rng = make_rng(config.seed, config.replicate)
    state = start_state(genome, rng, config.track_components, config.keep_events)
    step = STEPS[config.model]
    times = jump_times(config.horizon * n, rng, config.time_mode)

    records: List[SampleRecord] = []
    index = 0
    for c in config.checkpoints:
        limit = c * n + TIME_EPS
        while index < len(times) and times[index] <= limit:
            when = float(times[index])
            step(state, config.schedule.value_at(when / n), when=when)
            index += 1
            if config.check_invariants and state.steps % settings.validate_every == 0:
                check_state(state, config.model)

        distance = dcj_distance(state.reference, state.genome)
        if config.check_invariants:
            check_state(state, config.model)
            running = state.diagnostics.running_distance
            if running is not None and running != distance:
                raise WalkError(
                    f"Tracked distance {running} differs from exact {distance} at c={c}"
                )

        trees = state.label_graph.tree_count
        records.append(
            SampleRecord(
                model=config.model.value,
                n=n,
                k=k,
                p=config.schedule.describe(),
                seed=config.seed,
                replicate=config.replicate,
                c=c,
                t=c * n,
                jumps=state.steps,
                distance=distance,
                estimate_raw=distance_estimate(n, trees, clamp=False),
                estimate=distance_estimate(n, trees),
                fragmentation_events=(
                    state.diagnostics.fragmentation_events if config.track_components else None
                ),
            )
        )
        logger.debug(f"replicate {config.replicate} c={c}: d={distance}, trees={trees}")

    elapsed = time.perf_counter() - started
    logger.info(
        f"Replicate {config.replicate} ({config.model.value}, p={config.schedule.describe()}) "
        f"finished {state.steps} jumps in {elapsed:.2f}s"
    )
    return records
