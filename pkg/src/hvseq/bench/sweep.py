"""Similarity profiles over positions and correlation profiles over radius."""

from __future__ import annotations

from dataclasses import replace
from typing import Iterable, Sequence

from ..encoder import Codebook, EncoderConfig, PositionedSequence, encode_sequence
from ..similarity import Measure, sim_shifted
from .priming import PrimingRecord, run_priming
from .runner import map_realizations, mean_std, realization_seed


def sweep_profile(
    cfg: EncoderConfig,
    string: str,
    positions: Iterable[int],
    measure: Measure | str = Measure.COSINE,
    s: int = 0,
    realizations: int = 50,
    workers: int = 1,
) -> list[tuple[int, float, float]]:
    """Rows ``(p, mean, std)`` of sim(`string` at p, `string` at 0).

    With ``s > 0`` the string at p is the shifted operand.
    """
    positions = list(positions)
    if not positions:
        raise ValueError("empty position range")
    if not string:
        raise ValueError("empty string")
    measure = Measure(measure)

    def one(k: int) -> list[float]:
        cb = Codebook(replace(cfg, seed=realization_seed(cfg.seed, k)))
        y = encode_sequence(cb, string)
        return [
            sim_shifted(cb, measure, encode_sequence(cb, PositionedSequence(string, p)), y, s)[0]
            for p in positions
        ]

    per_real = map_realizations(one, realizations, workers)
    return [(p, *mean_std([row[n] for row in per_real])) for n, p in enumerate(positions)]


def sweep_radius(
    cfg: EncoderConfig,
    radii: Iterable[int],
    data: Sequence[PrimingRecord],
    measure: Measure | str = Measure.COSINE,
    s: int = 0,
    realizations: int = 50,
    workers: int = 1,
) -> list[tuple[int, float, float]]:
    """Rows ``(R, mean r, std r)`` of priming correlation against radius."""
    radii = list(radii)
    if not radii:
        raise ValueError("empty radius range")
    rows = []
    for r in radii:
        res = run_priming(replace(cfg, r=r), measure, s, realizations, data, workers)
        rows.append((r, res.r_mean, res.r_std))
    return rows
