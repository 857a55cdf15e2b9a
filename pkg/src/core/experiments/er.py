"""Label graph of a walk versus a matched Erdős–Rényi graph versus theory."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from src.core.theory import edge_probability, expected_tree_components, sample_er_tree_count
from src.core.walks import PSchedule, WalkConfig, WalkModel, make_rng, run

logger = logging.getLogger(__name__)

# Side-stream key for ER samples, distinct from walk streams of the same replicate.
ER_STREAM = 1


def split_sizes(n: int, k: int) -> List[int]:
    """k chromosome sizes summing to n, as equal as possible."""
    if k < 1 or n < k:
        raise ValueError(f"Cannot split {n} genes into {k} non-empty chromosomes")
    return [n // k + (1 if i < n % k else 0) for i in range(k)]


@dataclass
class ErComparison:
    """Tree counts of the walk's label graph, of G(n+k, p_edge), and (1 - gamma(c)) n."""

    n: int
    k: int
    c: float
    edge_probability: float
    theory: float
    walk_trees: List[int] = field(default_factory=list)
    er_trees: List[int] = field(default_factory=list)

    @property
    def mean_walk(self) -> float:
        return float(np.mean(self.walk_trees)) if self.walk_trees else math.nan

    @property
    def mean_er(self) -> float:
        return float(np.mean(self.er_trees)) if self.er_trees else math.nan

    @property
    def gaps(self) -> dict:
        """Pairwise differences of the three means, raw and divided by sqrt(n)."""
        scale = math.sqrt(self.n)
        raw = {
            "walk-er": self.mean_walk - self.mean_er,
            "walk-theory": self.mean_walk - self.theory,
            "er-theory": self.mean_er - self.theory,
        }
        return {name: (value, value / scale) for name, value in raw.items()}

    def per_run_gaps(self) -> List[float]:
        """walk - ER tree count per replicate."""
        return [w - e for w, e in zip(self.walk_trees, self.er_trees)]


def er_compare(
    n: int,
    k: int,
    c: float,
    reps: int,
    seed: int = 0,
    p: float = 0.5,
    sizes: Optional[List[int]] = None,
) -> ErComparison:
    """Run ``reps`` unrestricted walks to time cn and as many ER samples.

    Args:
        n: Gene count
        k: Linear chromosome count
        c: Time in units of n
        reps: Replicates of each sampler
        seed: Base seed
        p: delta1 probability of the walk
        sizes: Chromosome sizes (defaults to an even split of n into k)

    Returns:
        Comparison with per-replicate tree counts
    """
    sizes = sizes if sizes is not None else split_sizes(n, k)
    p_edge = edge_probability(n, k, c)
    comparison = ErComparison(
        n=n,
        k=k,
        c=c,
        edge_probability=p_edge,
        theory=expected_tree_components(n, c),
    )

    for replicate in range(reps):
        config = WalkConfig(
            model=WalkModel.UNRESTRICTED,
            sizes=sizes,
            schedule=PSchedule.constant(p),
            checkpoints=[c],
            seed=seed,
            replicate=replicate,
        )
        record = run(config)[-1]
        comparison.walk_trees.append(n - record.estimate_raw)
        comparison.er_trees.append(
            sample_er_tree_count(n + k, p_edge, make_rng(seed, replicate, ER_STREAM))
        )

    logger.info(
        f"ER comparison n={n}, k={k}, c={c}: walk {comparison.mean_walk:.1f}, "
        f"ER {comparison.mean_er:.1f}, theory {comparison.theory:.1f}"
    )
    return comparison
