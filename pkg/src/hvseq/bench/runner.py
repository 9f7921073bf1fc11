"""Seed schedule and realization fan-out shared by the benchmarks."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, TypeVar

import numpy as np

from ..fhrr import make_rng

T = TypeVar("T")

_SEED_MASK = (1 << 64) - 1


def realization_seed(master: int, k: int) -> int:
    """64-bit codebook seed of realization `k`; depends only on (master, k)."""
    ss = np.random.SeedSequence(int(master) & _SEED_MASK, spawn_key=(k, 0))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def realization_rng(master: int, k: int, *extra: int) -> np.random.Generator:
    """Auxiliary generator of realization `k`, optionally keyed further by `extra`."""
    key = (k, 1, *extra)
    return make_rng(np.random.SeedSequence(int(master) & _SEED_MASK, spawn_key=key))


def map_realizations(fn: Callable[[int], T], n: int, workers: int = 1) -> list[T]:
    """``[fn(0), ..., fn(n - 1)]``, optionally on a thread pool.

    Results come back in index order whatever the completion order.
    """
    if n < 1:
        raise ValueError(f"need at least one realization, got {n}")
    if workers <= 1:
        return [fn(k) for k in range(n)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, range(n)))


def mean_std(values) -> tuple[float, float]:
    """Mean and sample standard deviation (0 for a single value)."""
    arr = np.asarray(values, dtype=np.float64)
    mean = float(sum(arr.tolist()) / len(arr))
    std = float(arr.std(ddof=1)) if len(arr) > 1 else 0.0
    return mean, std
