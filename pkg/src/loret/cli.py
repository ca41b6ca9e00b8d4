"""Command-line front end.

Subcommands: fit, predict, benchmark, target, profile, simulate. All
randomness flows from ``--seed``; repeated runs with the same flags
produce byte-identical output files for any ``--jobs`` value. Exit
codes: 0 ok, 1 usage error, 2 runtime error.
"""

from __future__ import annotations

import argparse
import functools
import sys
from pathlib import Path

import numpy as np

from . import bench
from .dataset import format_float, load_csv, write_csv
from .estimators import (
    ClassificationTree,
    ModelTree,
    build_estimator,
    load_model,
    parse_model_spec,
    save_model,
)
from .logit import coefficient_table
from .mob import terminal_report
from .schema import load_schema, write_schema
from .synth import PRESETS, generate
from .targeting import (
    Banding,
    TargetingConfig,
    build_profiles,
    marginals_csv,
    parse_filter,
    profiles_text,
    quadrant_assign,
    targeting_list,
)

DEFAULT_PROFILE_VARS = ("party", "gender", "education", "income", "age")
DEFAULT_LIST_COLUMNS = (
    "age", "income", "education", "voteCount", "attendance", "gender", "party"
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser():
    parser = _Parser(
        prog="loret",
        description="Logistic regression trees for turnout modeling and targeting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_data_args(p):
        p.add_argument("--data", required=True, help="input CSV file")
        p.add_argument("--schema", required=True, help="schema declaration file")

    def add_tree_args(p):
        p.add_argument("--alpha", type=float, default=1e-6,
                       help="significance level for ctree/mob splitting")
        p.add_argument("--minsplit", type=int, default=None,
                       help="minimum rows per node (default 100; 1000 for mob)")
        p.add_argument("--max-depth", type=int, default=None,
                       help="depth cap (default 7 for cart/ctree, none for mob)")
        p.add_argument("--trim", type=float, default=0.1,
                       help="supLM boundary trimming (mob)")
        p.add_argument("--max-cutpoints", type=int, default=64,
                       help="cutpoint candidates per ordered variable (mob)")
        p.add_argument("--mc-permutations", type=int, default=0,
                       help="permutation p-values for ctree tests (0 = asymptotic)")

    p_fit = sub.add_parser("fit", help="fit one model and write its artifacts")
    add_data_args(p_fit)
    p_fit.add_argument("--model", required=True,
                       help="formula such as 'y~s|e', optionally '@cart'/'@ctree'")
    add_tree_args(p_fit)
    p_fit.add_argument("--seed", type=int, default=0)
    p_fit.add_argument("--out", required=True, help="output directory")

    p_pred = sub.add_parser("predict", help="score records with a saved model")
    add_data_args(p_pred)
    p_pred.add_argument("--model-file", required=True, help="model.json from fit")
    p_pred.add_argument("--cutoff", type=float, default=0.5)
    p_pred.add_argument("--out", required=True)

    p_bench = sub.add_parser("benchmark", help="bootstrap out-of-bag comparison")
    add_data_args(p_bench)
    p_bench.add_argument("--model", action="append", required=True,
                         dest="models", help="repeatable model spec")
    add_tree_args(p_bench)
    p_bench.add_argument("--folds", type=int, default=10)
    p_bench.add_argument("--cutoff", type=float, default=0.5)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--jobs", type=int, default=1)
    p_bench.add_argument("--out", required=True)

    p_target = sub.add_parser("target", help="ranked targeting list")
    add_data_args(p_target)
    p_target.add_argument("--model-file", required=True)
    p_target.add_argument("--range", nargs=2, type=float, default=(0.3, 0.7),
                          metavar=("LO", "HI"))
    p_target.add_argument("--filter", action="append", default=[],
                          dest="filters", help="attribute filter such as 'age<30'")
    p_target.add_argument("--support-model-file", default=None,
                          help="optional second model enabling quadrant output")
    p_target.add_argument("--out", required=True)

    p_prof = sub.add_parser("profile", help="per-segment voter profiles")
    add_data_args(p_prof)
    p_prof.add_argument("--model-file", required=True)
    p_prof.add_argument("--vars", nargs="*", default=list(DEFAULT_PROFILE_VARS))
    p_prof.add_argument("--income-bands", nargs=2, type=float,
                        default=(35000.0, 75000.0), metavar=("E1", "E2"))
    p_prof.add_argument("--out", required=True)

    p_sim = sub.add_parser("simulate", help="write a synthetic voter file")
    p_sim.add_argument("--preset", choices=sorted(PRESETS), default="household7")
    p_sim.add_argument("--n", type=int, required=True)
    p_sim.add_argument("--seed", type=int, required=True)
    p_sim.add_argument("--prevalence", type=float, default=None,
                       help="planted intercept-only prevalence (null preset)")
    p_sim.add_argument("--out", required=True)

    return parser


def _tree_params(args, spec, strategy):
    if spec.has_regressors and spec.has_partitioning:
        return {
            "alpha": args.alpha,
            "minsplit": args.minsplit if args.minsplit is not None else 1000,
            "max_depth": args.max_depth,
            "trim": args.trim,
            "max_cutpoints": args.max_cutpoints,
        }
    if spec.has_partitioning:
        return {
            "alpha": args.alpha,
            "minsplit": args.minsplit if args.minsplit is not None else 100,
            "max_depth": args.max_depth if args.max_depth is not None else 7,
            "mc_permutations": args.mc_permutations,
        }
    return {}


def _load(args):
    schema = load_schema(args.schema)
    ds, report = load_csv(args.data, schema)
    if report.dropped:
        print(report.to_text(), file=sys.stderr)
    return ds


def _write(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
        if not text.endswith("\n"):
            fh.write("\n")


def cmd_fit(args):
    ds = _load(args)
    spec, strategy = parse_model_spec(args.model)
    est = build_estimator(args.model, _tree_params(args, spec, strategy))
    est.fit(ds)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    save_model(est, out / "model.json")
    if isinstance(est, (ClassificationTree, ModelTree)):
        _write(out / "tree.txt", est.tree_.dumps())
        squares = set()
        for name in ds.schema.square_targets():
            squares.add(name)
        _write(
            out / "nodes.txt",
            terminal_report(est.tree_, ds.schema, square_columns=squares),
        )
    else:
        _write(out / "model.txt", coefficient_table(est.model_))
    print(f"fitted {args.model} on {ds.n_rows} rows -> {out}")
    return EXIT_OK


def cmd_predict(args):
    ds = _load(args)
    est = load_model(args.model_file)
    probs = est.predict_proba(ds)
    segments = est.segment_ids(ds)
    lines = ["row_id,prob,segment,class"]
    for rid, p, seg in zip(ds.row_ids, probs, segments):
        cls = 1 if p >= args.cutoff else 0
        lines.append(f"{rid},{format_float(float(p))},{int(seg)},{cls}")
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    _write(out / "predictions.csv", "\n".join(lines))
    print(f"scored {ds.n_rows} records -> {out / 'predictions.csv'}")
    return EXIT_OK


def cmd_benchmark(args):
    ds = _load(args)
    builders = {}
    for text in args.models:
        spec, strategy = parse_model_spec(text)
        label = spec.unparse() + (f" ({strategy})" if strategy else "")
        builders[label] = functools.partial(
            build_estimator, text, _tree_params(args, spec, strategy)
        )
    plan = bench.make_folds(ds.n_rows, args.folds, args.seed)
    result = bench.run_benchmark(
        ds, builders, plan, cutoff=args.cutoff, jobs=args.jobs
    )
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    _write(out / "benchmark.txt", bench.report_text(result))
    _write(out / "benchmark.csv", bench.report_csv(result))
    _write(out / "roc_curves.csv", bench.roc_csv(result))
    _write(out / "accuracy_cutoff.csv", bench.cutoff_accuracy_csv(result))
    if result.acc_ci is not None:
        _write(
            out / "ci_accuracy.txt",
            bench.ci_text(result.acc_ci, result.model_names, "accuracy"),
        )
        _write(
            out / "ci_auc.txt",
            bench.ci_text(result.auc_ci, result.model_names, "AUC"),
        )
    print(bench.report_text(result))
    return EXIT_OK


def cmd_target(args):
    ds = _load(args)
    est = load_model(args.model_file)
    lo, hi = args.range
    config = TargetingConfig(
        low=lo, high=hi, filters=tuple(parse_filter(f) for f in args.filters)
    )
    columns = [c for c in DEFAULT_LIST_COLUMNS if ds.schema.has_column(c)]
    listing = targeting_list(est, ds, config, columns=columns)
    text = listing.to_csv()
    if args.support_model_file:
        support = load_model(args.support_model_file)
        order_probs = support.predict_proba(ds)
        by_id = {rid: p for rid, p in zip(ds.row_ids, order_probs)}
        quad = quadrant_assign(
            listing.probs,
            np.asarray([by_id[rid] for rid in listing.row_ids]),
        )
        lines = text.split("\n")
        lines[0] += ",quadrant"
        for i, q in enumerate(quad, start=1):
            lines[i] += f",{int(q)}"
        text = "\n".join(lines)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    _write(out / "targeting.csv", text)
    n_t = int(listing.targeted.sum())
    print(f"targeted {n_t} of {len(listing)} records -> {out / 'targeting.csv'}")
    return EXIT_OK


def cmd_profile(args):
    ds = _load(args)
    est = load_model(args.model_file)
    if not hasattr(est, "tree_"):
        raise ValueError("profiles need a fitted tree model")
    e1, e2 = args.income_bands
    bandings = {"income": Banding("income", (e1, e2), ("<35k", "35k-75k", ">75k"))}
    profiles = build_profiles(est.tree_, ds, tuple(args.vars), bandings)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    _write(out / "profiles.txt", profiles_text(profiles))
    _write(out / "profile_marginals.csv", marginals_csv(profiles))
    print(f"wrote {len(profiles)} segment profiles -> {out}")
    return EXIT_OK


def cmd_simulate(args):
    preset = PRESETS[args.preset]
    if args.preset == "null" and args.prevalence is not None:
        cfg = preset(args.n, seed=args.seed, prevalence=args.prevalence)
    else:
        cfg = preset(args.n, seed=args.seed)
    ds, truth = generate(cfg)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_csv(ds, out / "data.csv")
    write_schema(ds.schema, out / "schema.txt")
    _write(out / "truth.csv", truth.to_csv(ds.row_ids))
    print(f"simulated {ds.n_rows} records ({args.preset}) -> {out}")
    return EXIT_OK


COMMANDS = {
    "fit": cmd_fit,
    "predict": cmd_predict,
    "benchmark": cmd_benchmark,
    "target": cmd_target,
    "profile": cmd_profile,
    "simulate": cmd_simulate,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"loret: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
