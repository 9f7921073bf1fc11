"""Correlation of string similarities with human priming times."""

from __future__ import annotations

import csv
import math
from dataclasses import asdict, dataclass, field, replace
from typing import Callable, Sequence

from ..encoder import Codebook, EncoderConfig, encode_sequence
from ..similarity import Measure, sim_shifted
from .runner import map_realizations, mean_std, realization_seed

FIELDS = ("prime", "target", "priming_ms")


class DatasetError(ValueError):
    """A priming dataset is missing, malformed, or too small."""


class UndefinedCorrelationError(ValueError):
    pass


@dataclass(frozen=True)
class PrimingRecord:
    prime: str
    target: str
    priming_ms: float


def load_priming_csv(path) -> list[PrimingRecord]:
    """Read ``prime,target,priming_ms`` rows; errors carry the line number."""
    records = []
    with open(path, encoding="utf-8", newline="") as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header is None or tuple(h.strip() for h in header) != FIELDS:
            raise DatasetError(f"{path}:1: expected header {','.join(FIELDS)}, got {header}")
        for row in reader:
            line = reader.line_num
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != 3:
                raise DatasetError(f"{path}:{line}: expected 3 fields, got {len(row)}")
            prime, target, ms = (c.strip() for c in row)
            if not prime or not target:
                raise DatasetError(f"{path}:{line}: empty prime or target")
            try:
                value = float(ms)
            except ValueError:
                raise DatasetError(f"{path}:{line}: priming_ms {ms!r} is not a number") from None
            if not math.isfinite(value):
                raise DatasetError(f"{path}:{line}: priming_ms must be finite")
            records.append(PrimingRecord(prime, target, value))
    return records


def _check_data(data: Sequence[PrimingRecord]) -> None:
    if len(data) < 2:
        raise DatasetError(f"need at least 2 prime/target pairs, got {len(data)}")


def pearson(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Sample Pearson correlation coefficient."""
    if len(xs) != len(ys):
        raise ValueError(f"length mismatch: {len(xs)} vs {len(ys)}")
    n = len(xs)
    if n < 2:
        raise ValueError("need at least two points")
    mx, my = math.fsum(xs) / n, math.fsum(ys) / n
    dx = [x - mx for x in xs]
    dy = [y - my for y in ys]
    sxx = math.fsum(a * a for a in dx)
    syy = math.fsum(b * b for b in dy)
    if sxx == 0.0 or syy == 0.0:
        raise UndefinedCorrelationError("correlation is undefined for zero variance")
    r = math.fsum(a * b for a, b in zip(dx, dy)) / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, r))


@dataclass
class PrimingResult:
    config: dict
    r_mean: float
    r_std: float
    r_values: list[float]
    # mean similarity of every pair over realizations, in dataset order
    similarities: list[float] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def run_priming(
    cfg: EncoderConfig,
    measure: Measure | str,
    s: int,
    realizations: int,
    data: Sequence[PrimingRecord],
    workers: int = 1,
) -> PrimingResult:
    """Pearson r between shift-max HV similarity and priming, per realization."""
    _check_data(data)
    measure = Measure(measure)
    times = [rec.priming_ms for rec in data]

    def one(k: int) -> list[float]:
        cb = Codebook(replace(cfg, seed=realization_seed(cfg.seed, k)))
        return [
            sim_shifted(cb, measure, encode_sequence(cb, rec.prime),
                        encode_sequence(cb, rec.target), s)[0]
            for rec in data
        ]

    per_real = map_realizations(one, realizations, workers)
    rs = [pearson(sims, times) for sims in per_real]
    r_mean, r_std = mean_std(rs)
    mean_sims = [mean_std([row[n] for row in per_real])[0] for n in range(len(data))]
    config = asdict(cfg) | {"measure": measure.value, "shift": s, "realizations": realizations}
    return PrimingResult(config, r_mean, r_std, rs, mean_sims)


def baseline_correlation(
    fn: Callable[[str, str], float], data: Sequence[PrimingRecord]
) -> tuple[float, list[float]]:
    """Pearson r of a deterministic string similarity ``fn(prime, target)``."""
    _check_data(data)
    sims = [fn(rec.prime, rec.target) for rec in data]
    return pearson(sims, [rec.priming_ms for rec in data]), sims
