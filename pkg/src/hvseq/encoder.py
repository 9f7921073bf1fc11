"""Symbol and sequence hypervectors built by recursive binding.

Position ``i`` is represented by the ``i``-th power of a single atomic base
vector ``pos``. A symbol at position ``i`` superimposes ``R`` consecutive
position powers bound to the symbol's atomic vector, so the same symbol at
nearby positions shares ``R - |j|`` atomic terms. Binding an encoding with
``pos ** j`` shifts every symbol by ``j`` positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from . import fhrr
from .fhrr import Hypervector

_SEED_MASK = (1 << 64) - 1

# spawn-key prefixes keep the pos stream and the per-symbol streams disjoint
_POS_STREAM = 0
_SYMBOL_STREAM = 1


@dataclass(frozen=True)
class EncoderConfig:
    """One reproducible encoding universe.

    d: hypervector dimension.
    r: similarity radius, the number of consecutive position powers per symbol.
    seed: master seed; reduced modulo 2**64.
    db: double the first and last symbol of every encoded string.
    """

    d: int = 10000
    r: int = 3
    seed: int = 42
    db: bool = False

    def __post_init__(self):
        if self.d < 1:
            raise fhrr.DimensionError(f"d must be >= 1, got {self.d}")
        if self.r < 1:
            raise ValueError(f"similarity radius must be >= 1, got {self.r}")


@dataclass(frozen=True)
class PositionedSequence:
    """A string of symbols whose first symbol sits at position `offset`."""

    symbols: Sequence[str]
    offset: int = 0

    def shifted(self, j: int) -> "PositionedSequence":
        return PositionedSequence(self.symbols, self.offset + j)


def double_edges(symbols: Sequence[str]) -> str:
    """Repeat the first and last symbol: ``"abc" -> "aabcc"``, ``"a" -> "aaa"``."""
    s = "".join(symbols)
    if not s:
        return s
    return s[0] + s + s[-1]


class Codebook:
    """Atomic vectors for ``pos`` and every symbol of one realization.

    Symbol vectors are generated lazily from a sub-seed derived from the
    master seed and the symbol's code point, so two codebooks with the same
    config agree on every symbol regardless of the order symbols are first
    seen. Lazy insertion mutates the cache; call :meth:`register` up front
    before sharing a codebook between threads.
    """

    def __init__(self, config: EncoderConfig):
        self.config = config
        self._seed = int(config.seed) & _SEED_MASK
        self.pos = fhrr.atomic(self._stream(_POS_STREAM), config.d)
        self._pos_phase = np.angle(self.pos)
        self._symbols: dict[str, Hypervector] = {}
        self._powers: dict[int, Hypervector] = {}
        self._roles: dict[int, Hypervector] = {}

    def _stream(self, *key: int) -> np.random.Generator:
        return fhrr.make_rng(np.random.SeedSequence(self._seed, spawn_key=key))

    @property
    def d(self) -> int:
        return self.config.d

    def symbol(self, sym: str) -> Hypervector:
        """Atomic vector of `sym` (created on first use)."""
        vec = self._symbols.get(sym)
        if vec is None:
            if len(sym) != 1:
                raise ValueError(f"symbols are single characters, got {sym!r}")
            vec = fhrr.atomic(self._stream(_SYMBOL_STREAM, ord(sym)), self.d)
            self._symbols[sym] = vec
        return vec

    def register(self, alphabet: Iterable[str]) -> None:
        for sym in alphabet:
            self.symbol(sym)

    @property
    def alphabet(self) -> list[str]:
        return sorted(self._symbols)

    def pos_power(self, i: int) -> Hypervector:
        """``pos ** i``, cached."""
        vec = self._powers.get(i)
        if vec is None:
            if i == 0:
                vec = fhrr.ones(self.d)
            else:
                vec = np.exp(1j * i * self._pos_phase)
            self._powers[i] = vec
        return vec

    def role(self, i: int) -> Hypervector:
        """Superposition of ``pos ** i`` .. ``pos ** (i + R - 1)``."""
        vec = self._roles.get(i)
        if vec is None:
            vec = fhrr.superpose([self.pos_power(i + k) for k in range(self.config.r)])
            self._roles[i] = vec
        return vec


def encode_symbol(cb: Codebook, sym: str, i: int = 0) -> Hypervector:
    """Hypervector of symbol `sym` at position `i` with radius ``cb.config.r``."""
    return fhrr.bind(cb.symbol(sym), cb.role(i))


SequenceLike = Union[str, Sequence[str], PositionedSequence]


def _as_positioned(seq: SequenceLike) -> PositionedSequence:
    if isinstance(seq, PositionedSequence):
        return seq
    return PositionedSequence(seq, 0)


def encode_sequence(cb: Codebook, seq: SequenceLike) -> Hypervector:
    """Superposition of the symbol hypervectors of `seq` at consecutive positions.

    A bare string is placed at offset 0. With ``db`` set in the codebook's
    config, the string is edge-doubled before encoding.
    """
    seq = _as_positioned(seq)
    symbols = list(seq.symbols)
    if not symbols:
        raise ValueError("cannot encode an empty sequence")
    if cb.config.db:
        symbols = list(double_edges(symbols))
    parts = [encode_symbol(cb, sym, seq.offset + k) for k, sym in enumerate(symbols)]
    return fhrr.superpose(parts)


def shift_hv(cb: Codebook, x: Hypervector, j: int) -> Hypervector:
    """Shift an encoding by `j` positions: ``pos ** j`` bound to `x`."""
    if j == 0:
        return x
    return fhrr.bind(cb.pos_power(j), x)
