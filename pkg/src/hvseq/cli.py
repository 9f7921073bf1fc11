"""Command-line front end.

Exit codes: 0 success (all criteria satisfied), 1 criteria not satisfied,
2 usage or I/O error. The default seed can be overridden with the
``HVSEQ_SEED`` environment variable.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from functools import partial

import numpy as np

from . import baselines
from .bench import (
    DatasetError,
    baseline_correlation,
    load_conditions,
    load_priming_csv,
    run_constraints,
    run_priming,
    sweep_profile,
    sweep_radius,
)
from .bench.runner import map_realizations, mean_std, realization_seed
from .encoder import Codebook, EncoderConfig, PositionedSequence, encode_sequence
from .similarity import Measure, sim_shifted

SEED_ENV = "HVSEQ_SEED"
EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    """Operational failure reported with exit code 2."""


def _default_seed() -> int:
    value = os.environ.get(SEED_ENV)
    if value is None:
        return 42
    try:
        return int(value)
    except ValueError:
        raise CliError(f"{SEED_ENV}={value!r} is not an integer") from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _nonempty(text: str) -> str:
    if not text:
        raise argparse.ArgumentTypeError("must be a nonempty string")
    return text


def _add_common(p: argparse.ArgumentParser, seed: int) -> None:
    g = p.add_argument_group("encoding")
    g.add_argument("--dim", type=_positive, default=10000, help="hypervector dimension D (default 10000)")
    g.add_argument("--radius", type=_positive, default=3, help="similarity radius R (default 3)")
    g.add_argument("--shift", type=_nonnegative, default=2,
                   help="shift radius s; shifts -s..s of the prime are tried (default 2)")
    g.add_argument("--measure", choices=[m.value for m in Measure], default="cosine",
                   help="hypervector similarity measure (default cosine)")
    g.add_argument("--db", action="store_true", help="double the first and last letters")
    g.add_argument("--seed", type=int, default=seed,
                   help=f"master seed (default {seed}; env {SEED_ENV})")
    g.add_argument("--realizations", type=_positive, default=50,
                   help="number of random codebooks averaged over (default 50)")
    g.add_argument("--workers", type=_positive, default=1,
                   help="threads for running realizations; output does not depend on it")


def build_parser(seed: int = 42) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hvseq", description="Similarity-preserving, shift-equivariant hypervectors of strings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sim", help="similarity of one prime/target pair")
    p.add_argument("prime", type=_nonempty)
    p.add_argument("target", type=_nonempty)
    _add_common(p, seed)

    p = sub.add_parser("bench-constraints", help="run the twenty-condition constraint benchmark")
    _add_common(p, seed)
    p.add_argument("--conditions", help="conditions CSV (default: bundled table)")
    p.add_argument("--eps", type=float, default=0.02, help="tolerance of '=' criteria (default 0.02)")
    p.add_argument("--decimals", type=int, default=2,
                   help="round means to this many decimals before judging criteria; -1 disables")
    p.add_argument("--distinct-distractors", action="store_true",
                   help="use a different novel letter for each 'd' in a pair")
    p.add_argument("--output", help="write the JSON report here")
    p.add_argument("--csv", help="write the per-condition table as CSV here")

    p = sub.add_parser("bench-priming", help="correlate similarities with priming times")
    p.add_argument("data", help="CSV with header prime,target,priming_ms")
    _add_common(p, seed)
    p.add_argument("--output", help="write the JSON report here")
    p.add_argument("--scatter", help="write per-pair priming_ms and similarities as CSV here")
    p.add_argument("--window", type=int, default=3, help="open-bigram kernel window (default 3)")

    p = sub.add_parser(
        "sweep", help="similarity profile over positions, or correlation over radius",
        description=(
            "profile mode: columns p,mean,std of sim(STRING at p, STRING at 0). "
            "radius mode: columns radius,r_mean,r_std of the priming correlation."
        ),
    )
    p.add_argument("--mode", choices=["profile", "radius"], default="profile")
    p.add_argument("--string", default="xyx", type=_nonempty, help="profile mode: string to sweep")
    p.add_argument("--from", dest="start", type=int, help="first sweep point (profile -10, radius 1)")
    p.add_argument("--to", dest="stop", type=int, help="last sweep point, inclusive (profile 10, radius 10)")
    p.add_argument("--data", help="radius mode: priming CSV")
    _add_common(p, seed)
    p.add_argument("--output", help="write CSV here (default stdout)")

    p = sub.add_parser("encode", help="dump the hypervector of a string")
    p.add_argument("string", type=_nonempty)
    p.add_argument("--offset", type=int, default=0, help="position of the first symbol")
    p.add_argument("--dim", type=_positive, default=10000)
    p.add_argument("--radius", type=_positive, default=3)
    p.add_argument("--db", action="store_true")
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("--format", choices=["csv", "npy"], default="csv",
                   help="csv rows of index,re,im, or a numpy .npy complex128 array")
    p.add_argument("--output", help="output path (default stdout; required for npy)")
    return parser


def _config(args) -> EncoderConfig:
    return EncoderConfig(d=args.dim, r=args.radius, seed=args.seed, db=args.db)


def _write_text(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror}") from None


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_sim(args) -> int:
    cfg = _config(args)

    def one(k: int) -> float:
        cb = Codebook(EncoderConfig(cfg.d, cfg.r, realization_seed(cfg.seed, k), cfg.db))
        x, y = encode_sequence(cb, args.prime), encode_sequence(cb, args.target)
        return sim_shifted(cb, args.measure, x, y, args.shift)[0]

    mean, std = mean_std(map_realizations(one, args.realizations, args.workers))
    print(f"seed={cfg.seed} D={cfg.d} R={cfg.r} s={args.shift} db={cfg.db} "
          f"measure={args.measure} realizations={args.realizations}")
    print(f"hv      {mean:.3f} +- {std:.3f}")
    dist = baselines.levenshtein(args.prime, args.target)
    print(f"-lev    {-dist}")
    if cfg.db:
        dist_db = baselines.levenshtein(baselines.double_edges(args.prime),
                                        baselines.double_edges(args.target))
        print(f"-lev db {-dist_db}")
    for norm in ("sum", "max"):
        print(f"lev/{norm} {baselines.lev_sim(args.prime, args.target, norm, cfg.db):.3f}")
    return EXIT_OK


def cmd_bench_constraints(args) -> int:
    cfg = _config(args)
    try:
        conditions = load_conditions(args.conditions)
    except OSError as exc:
        raise CliError(f"cannot read {args.conditions}: {exc.strerror}") from None
    decimals = None if args.decimals < 0 else args.decimals
    res = run_constraints(cfg, args.measure, args.shift, args.realizations, conditions,
                          eps=args.eps, decimals=decimals, workers=args.workers,
                          distinct_distractors=args.distinct_distractors)
    report = res.to_dict()
    if args.output:
        _write_text(args.output, json.dumps(report, indent=2) + "\n")
    if args.csv:
        rows = [(c["id"], c["criteria"], repr(c["mean"]), repr(c["std"]), "Y" if c["satisfied"] else "N")
                for c in report["conditions"]]
        _write_text(args.csv, _csv_text(("id", "criteria", "mean", "std", "satisfied"), rows))
    print(f"seed={cfg.seed} D={cfg.d} R={cfg.r} s={args.shift} db={cfg.db} "
          f"measure={args.measure} realizations={args.realizations}")
    by_id = {c.id: c for c in conditions}
    print(f"{'cond':>4} {'prime':>9} {'target':>9} {'criteria':>9} {'mean':>6} {'std':>6}  ok")
    for c in report["conditions"]:
        cond = by_id[c["id"]]
        print(f"{c['id']:>4} {cond.prime:>9} {cond.target:>9} {c['criteria']:>9} "
              f"{c['mean']:6.3f} {c['std']:6.3f}  {'Y' if c['satisfied'] else 'N'}")
    print(f"{res.n_satisfied}/{len(res.ids)} satisfied")
    return EXIT_OK if res.all_satisfied else EXIT_FAIL


def _load_data(path: str):
    try:
        return load_priming_csv(path)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None
    except DatasetError as exc:
        raise CliError(str(exc)) from None


def cmd_bench_priming(args) -> int:
    cfg = _config(args)
    data = _load_data(args.data)
    try:
        res = run_priming(cfg, args.measure, args.shift, args.realizations, data, args.workers)
    except DatasetError as exc:
        raise CliError(str(exc)) from None
    named = {
        "lev_max": partial(baselines.lev_sim, norm="max", db=False),
        "lev_max_db": partial(baselines.lev_sim, norm="max", db=True),
        "uob_gvh": baselines.uob_gvh_sim,
        "kernel_uob": partial(baselines.kernel_uob_sim, window=args.window),
        "wildcard3": baselines.wildcard3_sim,
    }
    base = {}
    for name, fn in named.items():
        try:
            base[name] = baseline_correlation(fn, data)
        except ValueError as exc:
            print(f"baseline {name} skipped: {exc}", file=sys.stderr)
    print(f"seed={cfg.seed} D={cfg.d} R={cfg.r} s={args.shift} db={cfg.db} "
          f"measure={args.measure} realizations={args.realizations} pairs={len(data)}")
    print(f"hv         r = {res.r_mean:.4f} +- {res.r_std:.4f}")
    for name, (r, _) in base.items():
        print(f"{name:<10} r = {r:.4f}")
    if args.output:
        report = res.to_dict() | {"baselines": {k: v[0] for k, v in base.items()}}
        _write_text(args.output, json.dumps(report, indent=2) + "\n")
    if args.scatter:
        names = list(base)
        rows = [
            (rec.prime, rec.target, repr(rec.priming_ms), repr(res.similarities[n]),
             *(repr(base[k][1][n]) for k in names))
            for n, rec in enumerate(data)
        ]
        header = ("prime", "target", "priming_ms", "hv", *names)
        _write_text(args.scatter, _csv_text(header, rows))
    return EXIT_OK


def cmd_sweep(args, parser) -> int:
    cfg = _config(args)
    if args.mode == "profile":
        start = -10 if args.start is None else args.start
        stop = 10 if args.stop is None else args.stop
    else:
        start = 1 if args.start is None else args.start
        stop = 10 if args.stop is None else args.stop
    if start > stop:
        parser.error(f"empty sweep range {start}..{stop}")
    points = range(start, stop + 1)
    if args.mode == "profile":
        rows = sweep_profile(cfg, args.string, points, args.measure, args.shift,
                             args.realizations, args.workers)
        header = ("p", "mean", "std")
    else:
        if args.data is None:
            parser.error("radius mode needs --data")
        if start < 1:
            parser.error("radius must be >= 1")
        data = _load_data(args.data)
        try:
            rows = sweep_radius(cfg, points, data, args.measure, args.shift,
                                args.realizations, args.workers)
        except DatasetError as exc:
            raise CliError(str(exc)) from None
        header = ("radius", "r_mean", "r_std")
    text = _csv_text(header, [(p, repr(m), repr(s)) for p, m, s in rows])
    print(f"# seed={cfg.seed}", file=sys.stderr)
    if args.output:
        _write_text(args.output, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_encode(args, parser) -> int:
    cfg = EncoderConfig(d=args.dim, r=args.radius, seed=args.seed, db=args.db)
    hv = encode_sequence(Codebook(cfg), PositionedSequence(args.string, args.offset))
    print(f"# seed={cfg.seed}", file=sys.stderr)
    if args.format == "npy":
        if not args.output:
            parser.error("--format npy needs --output")
        try:
            np.save(args.output, hv)
        except OSError as exc:
            raise CliError(f"cannot write {args.output}: {exc.strerror}") from None
        return EXIT_OK
    text = _csv_text(("index", "re", "im"), [(k, repr(z.real), repr(z.imag)) for k, z in enumerate(hv.tolist())])
    if args.output:
        _write_text(args.output, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def main(argv=None) -> int:
    try:
        parser = build_parser(_default_seed())
        args = parser.parse_args(argv)
        if args.command == "sim":
            return cmd_sim(args)
        if args.command == "bench-constraints":
            return cmd_bench_constraints(args)
        if args.command == "bench-priming":
            return cmd_bench_priming(args)
        if args.command == "sweep":
            return cmd_sweep(args, parser)
        return cmd_encode(args, parser)
    except CliError as exc:
        print(f"hvseq: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ValueError as exc:
        print(f"hvseq: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
