import math
import random

import numpy as np
import pytest
from scipy import stats

from hvseq.baselines import lev_sim, levenshtein
from hvseq.bench import (
    ConstraintCondition,
    DatasetError,
    PrimingRecord,
    UndefinedCorrelationError,
    baseline_correlation,
    evaluate_criteria,
    instantiate_pair,
    load_conditions,
    load_priming_csv,
    parse_criteria,
    pearson,
    realization_seed,
    run_constraints,
    run_priming,
    sweep_profile,
    sweep_radius,
)
from hvseq.encoder import EncoderConfig, double_edges

from oracles import expected_dot, expected_shift_max, placed
from table_reference import NEG_LEV, NEG_LEV_DB

SMALL = EncoderConfig(d=2000, r=3, seed=5)


def cond(prime, target, text="<(1)", cid=2):
    return ConstraintCondition(cid, prime, target, parse_criteria(text))


def test_bundled_conditions():
    conds = load_conditions()
    assert [c.id for c in conds] == list(range(1, 21))
    assert conds[13].prime == "125436" and str(conds[13].criteria) == "<(7)>(8)"
    assert str(conds[0].criteria) == ">0.95"


def test_conditions_file_validation(tmp_path):
    p = tmp_path / "c.csv"
    p.write_text("id,prime_template,target_template,criteria\n1,12,12,<(3)\n")
    with pytest.raises(ValueError, match="unknown"):
        load_conditions(p)
    p.write_text("id,prime_template,target_template,criteria\n1,12,12,>0.9\n1,1,1,>0.9\n")
    with pytest.raises(ValueError, match="unique"):
        load_conditions(p)


def test_instantiate_identical():
    p, t = instantiate_pair(cond("12345", "12345"), np.random.default_rng(0))
    assert p == t and len(p) == 5 and len(set(p)) == 5


def test_instantiate_distractors():
    rng = np.random.default_rng(1)
    p, t = instantiate_pair(cond("12dd5", "12345"), rng)
    assert p[:2] == t[:2] and p[4] == t[4]
    assert p[2] == p[3] and p[2] not in t
    p, t = instantiate_pair(cond("12dd5", "12345"), rng, distinct_distractors=True)
    assert p[2] != p[3] and not {p[2], p[3]} & set(t)
    p, t = instantiate_pair(cond("123d45", "12345"), rng)
    assert len(p) == 6 and p[3] not in t and p[:3] + p[4:] == t


def test_instantiate_bad_template():
    with pytest.raises(ValueError):
        instantiate_pair(cond("12x", "123"), np.random.default_rng(0))


def test_levenshtein_columns_exact():
    rng = np.random.default_rng(0)
    for c, nodb, db in zip(load_conditions(), NEG_LEV, NEG_LEV_DB):
        p, t = instantiate_pair(c, rng)
        assert -levenshtein(p, t) == nodb, c.id
        assert -levenshtein(double_edges(p), double_edges(t)) == db, c.id


def test_run_constraints_matches_overlap_oracle():
    res = run_constraints(EncoderConfig(d=4000, r=2, seed=3, db=True), "cosine", 1, 10)
    rng = np.random.default_rng(0)
    for c in load_conditions():
        p, t = instantiate_pair(c, rng)
        assert res.means[c.id] == pytest.approx(expected_shift_max(p, t, 2, 1, db=True), abs=0.03)
    assert res.means[1] == pytest.approx(1.0)
    assert res.stds[1] == pytest.approx(0.0, abs=1e-12)


def test_run_constraints_deterministic_and_parallel_safe():
    a = run_constraints(SMALL, "cosine", 2, 4)
    b = run_constraints(SMALL, "cosine", 2, 4)
    c = run_constraints(SMALL, "cosine", 2, 4, workers=3)
    assert a.to_dict() == b.to_dict() == c.to_dict()
    d = run_constraints(EncoderConfig(d=2000, r=3, seed=6), "cosine", 2, 4)
    assert d.means != a.means


def test_run_constraints_single_realization():
    res = run_constraints(SMALL, "jaccard", 0, 1)
    assert all(s == 0.0 for s in res.stds.values())
    assert res.to_dict()["total"] == 20


def test_criteria_order_independent():
    conds = load_conditions()
    res = run_constraints(SMALL, "cosine", 2, 3, conditions=conds)
    shuffled = conds[:]
    random.Random(0).shuffle(shuffled)
    assert evaluate_criteria(shuffled, res.means) == res.verdicts
    res2 = run_constraints(SMALL, "cosine", 2, 3, conditions=shuffled)
    assert res2.means == res.means and res2.verdicts == res.verdicts


def test_decimal_rounding_of_verdicts():
    conds = [cond("1", "1", ">0.95", 1), cond("1", "1", "<(3)", 2), cond("1", "1", ">0.95", 3)]
    means = {1: 1.0, 2: 0.801, 3: 0.804}
    assert evaluate_criteria(conds, means, decimals=None)[2]
    assert not evaluate_criteria(conds, means, decimals=2)[2]


def test_realization_stability():
    cfg = EncoderConfig(d=3000, r=3, seed=11, db=True)
    small = run_constraints(cfg, "cosine", 2, 8)
    big = run_constraints(cfg, "cosine", 2, 16)
    for cid in small.ids:
        bound = 3 * max(small.stds[cid], 1e-3) / math.sqrt(8)
        assert abs(big.means[cid] - small.means[cid]) <= bound + 1e-12


def test_realization_seed_schedule():
    assert realization_seed(42, 0) == realization_seed(42, 0)
    assert len({realization_seed(42, k) for k in range(100)}) == 100
    assert realization_seed(42, 1) != realization_seed(43, 1)


# Pearson


def test_pearson_linear():
    xs = [0.1, 0.5, 0.2, 0.9, 0.3]
    assert pearson(xs, [2 * x + 1 for x in xs]) == pytest.approx(1.0)
    assert pearson(xs, [-x for x in xs]) == pytest.approx(-1.0)


def test_pearson_closed_form():
    # sxy = 3, sxx = 2, syy = 42 / 9
    assert pearson([1, 2, 3], [1, 2, 4]) == pytest.approx(9 / math.sqrt(84), abs=1e-12)


def test_pearson_against_scipy():
    rng = np.random.default_rng(4)
    for _ in range(20):
        xs, ys = rng.normal(size=30), rng.normal(size=30)
        assert pearson(xs.tolist(), ys.tolist()) == pytest.approx(stats.pearsonr(xs, ys)[0], abs=1e-12)


def test_pearson_errors():
    with pytest.raises(UndefinedCorrelationError):
        pearson([1, 1, 1], [1, 2, 3])
    with pytest.raises(ValueError):
        pearson([1], [1])
    with pytest.raises(ValueError):
        pearson([1, 2], [1, 2, 3])


# priming dataset and runs


def write_csv(path, rows, header="prime,target,priming_ms"):
    path.write_text(header + "\n" + "".join(f"{r}\n" for r in rows))
    return path


def test_load_priming_csv(tmp_path):
    p = write_csv(tmp_path / "d.csv", ["abc,abd,12.5", "", "xy,xyz, -3"])
    assert load_priming_csv(p) == [PrimingRecord("abc", "abd", 12.5), PrimingRecord("xy", "xyz", -3.0)]


@pytest.mark.parametrize(
    "rows,header,msg",
    [
        (["abc,abd,1"], "prime,target", ":1:"),
        (["abc,abd,1", "abc,abd"], "prime,target,priming_ms", ":3:"),
        (["abc,abd,fast"], "prime,target,priming_ms", ":2:"),
        (["abc,abd,nan"], "prime,target,priming_ms", ":2:"),
        ([",abd,1"], "prime,target,priming_ms", ":2:"),
    ],
)
def test_load_priming_csv_errors(tmp_path, rows, header, msg):
    p = write_csv(tmp_path / "d.csv", rows, header)
    with pytest.raises(DatasetError, match=msg):
        load_priming_csv(p)


def test_bundled_synthetic_dataset():
    from importlib import resources

    path = resources.files("hvseq").joinpath("data", "synthetic_priming_not_paper_data.csv")
    data = load_priming_csv(path)
    assert len(data) >= 20
    r, _ = baseline_correlation(lambda a, b: lev_sim(a, b, "max"), data)
    assert r == pytest.approx(1.0, abs=1e-3)


def linear_dataset():
    pairs = [("abcde", "abcde"), ("abde", "abcde"), ("axcde", "abcde"), ("abdce", "abcde"),
             ("xyzwv", "abcde"), ("abcdx", "abcde"), ("edcba", "abcde"), ("ab", "abcde")]
    return [PrimingRecord(p, t, 40 * lev_sim(p, t, "max") + 3) for p, t in pairs]


def test_run_priming():
    data = linear_dataset()
    res = run_priming(SMALL, "simpson", 2, 5, data)
    assert len(res.r_values) == 5 and len(res.similarities) == len(data)
    assert res.r_mean == pytest.approx(np.mean(res.r_values))
    assert 0.5 < res.r_mean <= 1.0
    assert res.similarities[0] == pytest.approx(1.0)
    assert run_priming(SMALL, "simpson", 2, 5, data, workers=2).to_dict() == res.to_dict()


def test_run_priming_needs_data():
    with pytest.raises(DatasetError):
        run_priming(SMALL, "cosine", 0, 2, [PrimingRecord("ab", "ab", 1.0)])
    with pytest.raises(DatasetError):
        baseline_correlation(lambda a, b: 1.0, [])


def test_baseline_correlation_linear():
    r, sims = baseline_correlation(lambda a, b: lev_sim(a, b, "max"), linear_dataset())
    assert r == pytest.approx(1.0)
    assert sims[0] == 1.0


# sweeps


def test_sweep_profile_xyx_matches_overlap_oracle():
    rows = sweep_profile(EncoderConfig(d=10000, r=3, seed=2), "xyx", range(-8, 9), realizations=10)
    ys = placed("xyx")
    norm = expected_dot(ys, ys, 3)
    assert [r[0] for r in rows] == list(range(-8, 9))
    for p, mean, _ in rows:
        assert mean == pytest.approx(expected_dot(placed("xyx", p), ys, 3) / norm, abs=0.05)
    by_p = {p: m for p, m, _ in rows}
    assert by_p[0] == pytest.approx(1.0)
    for p in range(0, 8):
        assert by_p[p + 1] <= by_p[p] + 0.05
        assert by_p[-p - 1] <= by_p[-p] + 0.05
    assert all(abs(by_p[p]) < 0.05 for p in by_p if abs(p) >= 5)


def test_sweep_profile_with_shift_is_flat():
    rows = sweep_profile(EncoderConfig(d=2000, r=2, seed=2), "xyz", range(-2, 3), s=2, realizations=3)
    assert all(m == pytest.approx(1.0) for _, m, _ in rows)


def test_sweep_errors():
    with pytest.raises(ValueError):
        sweep_profile(SMALL, "xyx", [])
    with pytest.raises(ValueError):
        sweep_radius(SMALL, [], linear_dataset())


def test_sweep_radius():
    rows = sweep_radius(EncoderConfig(d=1000, seed=1), [1, 2, 3], linear_dataset(), "cosine", 1, 3)
    assert [r[0] for r in rows] == [1, 2, 3]
    assert all(-1 <= r[1] <= 1 for r in rows)
