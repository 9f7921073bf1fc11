"""Complex phasor hypervector algebra (FHRR).

Hypervectors are plain one-dimensional ``numpy.complex128`` arrays. Atomic
vectors have unit-magnitude components with uniformly random phases; binding
is the component-wise product and superposition the component-wise sum.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

Hypervector = np.ndarray

# Tolerance for deciding that a component has unit magnitude.
UNIT_TOL = 1e-9


class DimensionError(ValueError):
    """Hypervectors of different (or invalid) lengths were combined."""


class NotAtomicError(ValueError):
    """An operation defined only for unit-magnitude vectors got something else."""


def make_rng(seed: int | np.random.SeedSequence) -> np.random.Generator:
    """Return a PCG64 generator; the same seed always gives the same stream."""
    return np.random.Generator(np.random.PCG64(seed))


def atomic(rng: np.random.Generator, d: int) -> Hypervector:
    """Draw a random atomic hypervector of length `d`.

    Phases are i.i.d. uniform on [0, 2*pi).
    """
    if d < 1:
        raise DimensionError(f"dimension must be >= 1, got {d}")
    phases = rng.uniform(0.0, 2.0 * np.pi, size=d)
    return np.exp(1j * phases)


def ones(d: int) -> Hypervector:
    """The binding identity."""
    if d < 1:
        raise DimensionError(f"dimension must be >= 1, got {d}")
    return np.ones(d, dtype=np.complex128)


def _check_same_length(x: Hypervector, y: Hypervector) -> None:
    if x.shape != y.shape:
        raise DimensionError(f"length mismatch: {x.shape} vs {y.shape}")


def bind(x: Hypervector, y: Hypervector) -> Hypervector:
    _check_same_length(x, y)
    return x * y


def superpose(xs: Sequence[Hypervector]) -> Hypervector:
    """Component-wise sum of `xs`, accumulated in list order."""
    if len(xs) == 0:
        raise ValueError("superpose needs at least one hypervector")
    out = np.array(xs[0], dtype=np.complex128, copy=True)
    for x in xs[1:]:
        _check_same_length(out, x)
        out += x
    return out


def is_atomic(x: Hypervector, tol: float = UNIT_TOL) -> bool:
    return bool(np.all(np.abs(np.abs(x) - 1.0) <= tol))


def power(x: Hypervector, i: int) -> Hypervector:
    """Integer power of an atomic hypervector.

    Negative exponents give powers of the complex conjugate, and ``i == 0``
    gives the all-ones vector. Computed from the phases so that large
    exponents do not accumulate rounding from repeated products.
    """
    if not is_atomic(x):
        raise NotAtomicError("power is only defined for atomic hypervectors")
    i = int(i)
    if i == 0:
        return ones(x.shape[0])
    if i == 1:
        return np.array(x, dtype=np.complex128, copy=True)
    if i == -1:
        return np.conj(x)
    return np.exp(1j * i * np.angle(x))


def dot(x: Hypervector, y: Hypervector) -> complex:
    """Complex dot product sum_k x_k * conj(y_k)."""
    _check_same_length(x, y)
    return complex(np.vdot(y, x))
