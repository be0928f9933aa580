"""Seeded random streams.

Every draw comes from numpy's Philox counter-based generator keyed by
SeedSequence(seed, spawn_key=stream). The same (seed, stream) yields the same
bits on every platform, independent of execution order.
"""

from __future__ import annotations

import numpy as np

MLAE_STREAM = 1
CLASSICAL_STREAM = 2


def make_generator(seed: int, *stream: int) -> np.random.Generator:
    sequence = np.random.SeedSequence(seed, spawn_key=tuple(stream))
    return np.random.Generator(np.random.Philox(sequence))
