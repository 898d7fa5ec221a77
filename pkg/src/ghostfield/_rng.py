"""Seed handling for the Monte Carlo estimators.

All randomness comes from numpy's PCG64 via `numpy.random.Generator`. A run
is parametrized by (seed, workers): the sample count is split into `workers`
contiguous chunks and each chunk gets its own generator spawned from
`SeedSequence(seed)`. Results are therefore bit-reproducible for a fixed
(seed, workers) pair.
"""

from __future__ import annotations

import numpy as np


def chunk_sizes(n: int, workers: int) -> list[int]:
    """Split n samples into `workers` near-equal contiguous chunks."""
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    if workers > n:
        raise ValueError(f"workers ({workers}) must not exceed n ({n})")
    base, rem = divmod(n, workers)
    return [base + 1 if i < rem else base for i in range(workers)]


def chunk_generators(seed: int, workers: int) -> list[np.random.Generator]:
    """One independent PCG64 generator per chunk, derived from the seed."""
    children = np.random.SeedSequence(seed).spawn(workers)
    return [np.random.Generator(np.random.PCG64(child)) for child in children]
