"""Similarity of hypervectors: cosine, Jaccard, Simpson, and shift-max."""

from __future__ import annotations

import enum

import numpy as np

from . import fhrr
from .encoder import Codebook, shift_hv
from .fhrr import Hypervector


class UndefinedSimilarityError(ValueError):
    """Similarity requested for a zero hypervector."""


class Measure(str, enum.Enum):
    COSINE = "cosine"
    JACCARD = "jaccard"
    SIMPSON = "simpson"


def _self_dot(x: Hypervector) -> float:
    d = fhrr.dot(x, x)
    assert abs(d.imag) < 1e-9 * x.shape[0]
    return d.real


def _from_dots(m: Measure, xy: float, xx: float, yy: float) -> float:
    if xx <= 0.0 or yy <= 0.0:
        raise UndefinedSimilarityError("similarity is undefined for a zero hypervector")
    if m is Measure.COSINE:
        return xy / np.sqrt(xx * yy)
    if m is Measure.JACCARD:
        return xy / (xx + yy - xy)
    if m is Measure.SIMPSON:
        return xy / min(xx, yy)
    raise ValueError(f"unknown measure {m!r}")


def sim(m: Measure | str, x: Hypervector, y: Hypervector) -> float:
    """Similarity of `x` and `y` from the real part of their dot product."""
    m = Measure(m)
    return float(_from_dots(m, fhrr.dot(x, y).real, _self_dot(x), _self_dot(y)))


def shift_order(s: int) -> list[int]:
    """Shifts -s..s in tie-break order: 0, -1, 1, -2, 2, ..."""
    if s < 0:
        raise ValueError(f"shift radius must be >= 0, got {s}")
    order = [0]
    for k in range(1, s + 1):
        order += [-k, k]
    return order


def sim_shifted(
    cb: Codebook, m: Measure | str, x: Hypervector, y: Hypervector, s: int = 0
) -> tuple[float, int]:
    """Maximum similarity over shifts ``j in [-s, s]`` of `x` against `y`.

    Returns ``(value, shift)``. Ties go to the smallest ``|j|``, negative
    first.
    """
    m = Measure(m)
    # shifting binds with unit-magnitude components, so |x| is unchanged
    xx, yy = _self_dot(x), _self_dot(y)
    best, best_j = -np.inf, 0
    for j in shift_order(s):
        xy = fhrr.dot(shift_hv(cb, x, j), y).real
        value = _from_dots(m, xy, xx, yy)
        if value > best:
            best, best_j = value, j
    return float(best), best_j
