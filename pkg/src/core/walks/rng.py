"""Seeded random streams, one per (seed, replicate)."""

import numpy as np


def make_rng(seed: int, replicate: int, *stream: int) -> np.random.Generator:
    """Philox counter-based generator keyed by ``SeedSequence([seed, replicate, *stream])``.

    Streams depend only on the key, never on worker count or run order.
    Extra ``stream`` keys give independent side streams for the same replicate.
    """
    return np.random.Generator(
        np.random.Philox(np.random.SeedSequence([seed, replicate, *stream]))
    )
