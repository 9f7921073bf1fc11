"""Constraint benchmark: twenty prime/target conditions with criteria."""

from __future__ import annotations

import csv
import io
from dataclasses import asdict, dataclass, field, replace
from importlib import resources

import numpy as np

from ..encoder import Codebook, EncoderConfig, encode_sequence
from ..similarity import Measure, sim_shifted
from .criteria import Criteria, parse_criteria
from .runner import map_realizations, mean_std, realization_rng, realization_seed

DATA_FILE = "constraints_v1.csv"

DIGIT_LETTERS = {str(k): "abcdefghij"[k - 1] for k in range(1, 10)} | {"0": "j"}
DISTRACTOR_LETTERS = "klmnopqrstuvwxyz"
DISTRACTOR = "d"


@dataclass(frozen=True)
class ConstraintCondition:
    id: int
    prime: str
    target: str
    criteria: Criteria


def load_conditions(path=None) -> list[ConstraintCondition]:
    """Read conditions from a CSV ``id,prime_template,target_template,criteria``.

    Without `path`, the bundled twenty-condition table is used.
    """
    if path is None:
        text = resources.files("hvseq").joinpath("data", DATA_FILE).read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    conds = [
        ConstraintCondition(
            int(row["id"]), row["prime_template"], row["target_template"],
            parse_criteria(row["criteria"]),
        )
        for row in csv.DictReader(io.StringIO(text))
    ]
    ids = {c.id for c in conds}
    if len(ids) != len(conds):
        raise ValueError("condition ids must be unique")
    for c in conds:
        missing = c.criteria.refs() - ids
        if missing:
            raise ValueError(f"condition {c.id} refers to unknown conditions {sorted(missing)}")
    return conds


def instantiate_pair(
    cond: ConstraintCondition, rng: np.random.Generator, distinct_distractors: bool = False
) -> tuple[str, str]:
    """Turn templates into concrete strings.

    Digits become fixed letters shared by prime and target. Every ``d``
    becomes a novel letter not used by any digit: one letter for the whole
    pair by default, or a different letter per occurrence with
    `distinct_distractors`.
    """
    n_distract = cond.prime.count(DISTRACTOR) + cond.target.count(DISTRACTOR)
    if not distinct_distractors:
        n_distract = min(n_distract, 1)
    if n_distract > len(DISTRACTOR_LETTERS):
        raise ValueError(f"too many distractors in condition {cond.id}")
    letters = rng.choice(list(DISTRACTOR_LETTERS), size=n_distract, replace=False).tolist()
    take = iter(letters) if distinct_distractors else None

    def fill(template: str) -> str:
        out = []
        for ch in template:
            if ch == DISTRACTOR:
                out.append(next(take) if take is not None else letters[0])
            elif ch in DIGIT_LETTERS:
                out.append(DIGIT_LETTERS[ch])
            else:
                raise ValueError(f"bad template character {ch!r} in condition {cond.id}")
        return "".join(out)

    return fill(cond.prime), fill(cond.target)


@dataclass
class ConstraintResult:
    config: dict
    ids: list[int]
    means: dict[int, float]
    stds: dict[int, float]
    verdicts: dict[int, bool]
    criteria: dict[int, str]
    values: dict[int, list[float]] = field(repr=False, default_factory=dict)

    @property
    def n_satisfied(self) -> int:
        return sum(self.verdicts.values())

    @property
    def all_satisfied(self) -> bool:
        return self.n_satisfied == len(self.ids)

    def to_dict(self) -> dict:
        return {
            "config": self.config,
            "conditions": [
                {
                    "id": i,
                    "criteria": self.criteria[i],
                    "mean": self.means[i],
                    "std": self.stds[i],
                    "satisfied": self.verdicts[i],
                }
                for i in self.ids
            ],
            "satisfied": self.n_satisfied,
            "total": len(self.ids),
        }


def evaluate_criteria(
    conditions: list[ConstraintCondition],
    means: dict[int, float],
    eps: float = 0.02,
    decimals: int | None = 2,
) -> dict[int, bool]:
    """Verdict of every condition, judged on means rounded to `decimals`.

    Rounding makes conditions whose expected similarities coincide compare
    as equal instead of by sampling noise; ``decimals=None`` disables it.
    """
    if decimals is not None:
        means = {k: round(v, decimals) + 0.0 for k, v in means.items()}
    return {c.id: c.criteria.evaluate(c.id, means, eps) for c in conditions}


def run_constraints(
    cfg: EncoderConfig,
    measure: Measure | str = Measure.COSINE,
    s: int = 0,
    realizations: int = 50,
    conditions: list[ConstraintCondition] | None = None,
    eps: float = 0.02,
    decimals: int | None = 2,
    workers: int = 1,
    distinct_distractors: bool = False,
) -> ConstraintResult:
    """Mean shift-max similarity per condition over independent realizations.

    Each realization gets its own codebook and distractor letters, seeded
    from ``cfg.seed`` and the realization index (distractors also from the
    condition id, so results do not depend on condition order). The prime
    is the shifted operand.
    """
    measure = Measure(measure)
    if conditions is None:
        conditions = load_conditions()

    def one(k: int) -> list[float]:
        cb = Codebook(replace(cfg, seed=realization_seed(cfg.seed, k)))
        out = []
        for cond in conditions:
            rng = realization_rng(cfg.seed, k, cond.id)
            prime, target = instantiate_pair(cond, rng, distinct_distractors)
            x, y = encode_sequence(cb, prime), encode_sequence(cb, target)
            out.append(sim_shifted(cb, measure, x, y, s)[0])
        return out

    per_real = map_realizations(one, realizations, workers)
    ids = [c.id for c in conditions]
    values = {cid: [row[n] for row in per_real] for n, cid in enumerate(ids)}
    means, stds = {}, {}
    for cid in ids:
        means[cid], stds[cid] = mean_std(values[cid])
    config = asdict(cfg) | {
        "measure": measure.value,
        "shift": s,
        "realizations": realizations,
        "eps": eps,
        "decimals": decimals,
        "distinct_distractors": distinct_distractors,
    }
    return ConstraintResult(
        config=config,
        ids=ids,
        means=means,
        stds=stds,
        verdicts=evaluate_criteria(conditions, means, eps, decimals),
        criteria={c.id: str(c.criteria) for c in conditions},
        values=values,
    )
