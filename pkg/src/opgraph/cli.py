"""Command-line driver: verify / sweep / demo with JSON and CSV reports.

Exit codes: 0 = all hard checks passed, 1 = a mathematical check failed,
2 = usage or parameter error. Hard checks are the anticlique verdict and
agreement of the two dimension oracles (full or subsampled); a mismatch
between computed dimension and the claimed closed form is reported via
``formula_match`` but is never fatal.

CSV columns (fixed order):
    construction,n,p,y,h,d,space_dim,code_dim,graph_dim_labels,
    graph_dim_gram,paper_claimed_dim,formula_match,anticlique,max_residual,
    knill_max,commutative_max,runtime_ms
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

import numpy as np

from . import __version__
from .constructions import (
    Section4Params,
    baseline_bounds,
    build_remark2,
    build_section2,
    build_section3,
    build_section4,
    claimed_dim_remark2,
    claimed_dim_section2,
    claimed_dim_section3,
    claimed_dim_section4,
    enumerate_section4_params,
)
from .graph import graph_dim, is_anticlique, subsample_labels
from .linalg import Tolerance
from .weyl import pair_dense

# label graphs up to this size get the full Gram oracle without being asked
FULL_GRAM_AUTO = 1500
# beyond this, refuse --full-gram: the Gram matrix is out of desk-scale budget
FULL_GRAM_CAP = 6000

CSV_COLUMNS = [
    "construction",
    "n",
    "p",
    "y",
    "h",
    "d",
    "space_dim",
    "code_dim",
    "graph_dim_labels",
    "graph_dim_gram",
    "paper_claimed_dim",
    "formula_match",
    "anticlique",
    "max_residual",
    "knill_max",
    "commutative_max",
    "runtime_ms",
]


class UsageError(Exception):
    pass


def _build(construction: str, args) -> tuple:
    """Returns (graph, code, params_echo, claimed_dim)."""
    if construction == "section2":
        g, code = build_section2()
        return g, code, {}, claimed_dim_section2()
    if construction == "section3":
        if args.n is None:
            raise UsageError("section3 requires --n")
        g, code = build_section3(args.n, allow_n2=getattr(args, "allow_n2", False))
        return g, code, {"n": args.n}, claimed_dim_section3(args.n)
    if construction == "section4":
        if None in (args.p, args.y, args.h, args.d):
            raise UsageError("section4 requires --p --y --h --d")
        params = Section4Params(
            p=args.p, y=args.y, h=args.h, d=args.d, allow_d1=getattr(args, "allow_d1", False)
        )
        g, code = build_section4(params)
        echo = {"p": params.p, "y": params.y, "h": params.h, "d": params.d, "n": params.n}
        return g, code, echo, claimed_dim_section4(params)
    if construction == "remark2":
        if args.n is None:
            raise UsageError("remark2 requires --n")
        g, code = build_remark2(args.n)
        return g, code, {"n": args.n}, claimed_dim_remark2(args.n)
    raise UsageError(f"unknown construction {construction!r}")


def run_verification(construction: str, args) -> tuple[dict, bool]:
    """Build one construction, run the configured oracles and the anticlique
    check, and assemble the report. Returns (report, hard_checks_passed)."""
    started = time.perf_counter()
    g, code, params_echo, claimed = _build(construction, args)
    tol = Tolerance(absolute=args.tol_abs, relative=args.tol_rel)
    oracle = args.oracle

    dim_labels = None
    dim_gram = None
    oracle_ok = True

    if oracle in ("labels", "both"):
        if not g.has_labels:
            if oracle == "labels":
                raise UsageError(f"{construction} has no label form; use --oracle gram")
        else:
            dim_labels = graph_dim(g, "labels")

    if oracle in ("gram", "both"):
        if not g.has_labels or g.n_generators <= FULL_GRAM_AUTO or args.full_gram:
            if g.n_generators > FULL_GRAM_CAP:
                raise UsageError(
                    f"full Gram oracle refused for {g.n_generators} generators "
                    f"(cap {FULL_GRAM_CAP}); rerun without --full-gram to use the "
                    "seeded subsample check"
                )
            dim_gram = graph_dim(g, "gram", tol)
        else:
            # too large for the full Gram matrix: cross-check a seeded subsample
            sub = subsample_labels(g, args.subsample_size, args.subsample_seed)
            sub_labels = graph_dim(sub, "labels")
            sub_gram = graph_dim(sub, "gram", tol)
            oracle_ok = oracle_ok and (sub_labels == sub_gram)

    if dim_labels is not None and dim_gram is not None:
        oracle_ok = oracle_ok and (dim_labels == dim_gram)

    report_ac = is_anticlique(g, code, tol)
    computed = dim_labels if dim_labels is not None else dim_gram
    formula_match = None if computed is None else (computed == claimed)
    bounds = baseline_bounds(g.space_dim, code.code_dim) if code.code_dim >= 2 else None

    runtime_ms = 0 if args.deterministic else int((time.perf_counter() - started) * 1000)
    report = {
        "schema": 1,
        "construction": construction,
        "params": params_echo,
        "space_dim": g.space_dim,
        "code_dim": code.code_dim,
        "graph_dim_labels": dim_labels,
        "graph_dim_gram": dim_gram,
        "paper_claimed_dim": claimed,
        "formula_match": formula_match,
        "anticlique": report_ac.verdict,
        "max_residual": report_ac.residual,
        "bounds": bounds,
        "tolerance": {"absolute": tol.absolute, "relative": tol.relative},
        "runtime_ms": runtime_ms,
        "tool_version": __version__,
    }
    hard_ok = report_ac.verdict and oracle_ok
    return report, hard_ok


def _print_report_text(report: dict, hard_ok: bool) -> None:
    params = ", ".join(f"{k}={v}" for k, v in report["params"].items())
    print(f"construction: {report['construction']}" + (f" ({params})" if params else ""))
    for key in (
        "space_dim",
        "code_dim",
        "graph_dim_labels",
        "graph_dim_gram",
        "paper_claimed_dim",
        "formula_match",
        "anticlique",
        "max_residual",
        "bounds",
    ):
        print(f"  {key}: {report[key]}")
    print(f"hard checks: {'pass' if hard_ok else 'FAIL'}")


def cmd_verify(args) -> int:
    try:
        report, hard_ok = run_verification(args.construction, args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        _print_report_text(report, hard_ok)
    return 0 if hard_ok else 1


def _parse_range(text: str) -> range:
    try:
        lo, hi = text.split("..")
        return range(int(lo), int(hi) + 1)
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}, expected A..B") from exc


def _sweep_points(args) -> list[tuple[str, argparse.Namespace]]:
    points = []
    if args.construction == "section3":
        if args.n_range is None:
            raise UsageError("sweep section3 requires --n A..B")
        for n in _parse_range(args.n_range):
            ns = argparse.Namespace(**vars(args))
            ns.n = n
            points.append(("section3", ns))
    elif args.construction == "section4":
        if args.n_max is None:
            raise UsageError("sweep section4 requires --n-max")
        for params in enumerate_section4_params(args.n_max):
            ns = argparse.Namespace(**vars(args))
            ns.p, ns.y, ns.h, ns.d = params.p, params.y, params.h, params.d
            points.append(("section4", ns))
    else:
        raise UsageError(f"sweep does not support construction {args.construction!r}")
    if not points:
        raise UsageError("empty parameter range")
    return points


def _csv_row(report: dict) -> dict:
    p = report["params"]
    bounds = report["bounds"] or {}
    row = {
        "construction": report["construction"],
        "n": p.get("n", ""),
        "p": p.get("p", ""),
        "y": p.get("y", ""),
        "h": p.get("h", ""),
        "d": p.get("d", ""),
        "space_dim": report["space_dim"],
        "code_dim": report["code_dim"],
        "graph_dim_labels": _blank_if_none(report["graph_dim_labels"]),
        "graph_dim_gram": _blank_if_none(report["graph_dim_gram"]),
        "paper_claimed_dim": report["paper_claimed_dim"],
        "formula_match": _blank_if_none(report["formula_match"]),
        "anticlique": report["anticlique"],
        "max_residual": report["max_residual"],
        "knill_max": bounds.get("knill_max", ""),
        "commutative_max": bounds.get("commutative_max", ""),
        "runtime_ms": report["runtime_ms"],
    }
    return row


def _blank_if_none(value):
    return "" if value is None else value


def cmd_sweep(args) -> int:
    try:
        points = _sweep_points(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    all_ok = True
    if args.format == "csv":
        buffer = io.StringIO()
        csv.DictWriter(buffer, fieldnames=CSV_COLUMNS).writeheader()
        print(buffer.getvalue(), end="")
    for construction, ns in points:
        try:
            report, hard_ok = run_verification(construction, ns)
        except (UsageError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        all_ok = all_ok and hard_ok
        if args.format == "csv":
            buffer = io.StringIO()
            row_writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS)
            row_writer.writerow(_csv_row(report))
            print(buffer.getvalue(), end="")
        else:
            print(json.dumps(report))
    return 0 if all_ok else 1


def cmd_demo(args) -> int:
    try:
        g, code, params_echo, _ = _build(args.construction, args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.trials < 0:
        print("error: --trials must be >= 0", file=sys.stderr)
        return 2
    tol = Tolerance(absolute=args.tol_abs, relative=args.tol_rel)
    rng = np.random.default_rng(args.seed)
    s = code.isometry
    names = code.basis_names or tuple(f"v_{j + 1}" for j in range(code.code_dim))
    worst = 0.0
    for trial in range(args.trials):
        gen_idx = int(rng.integers(g.n_generators))
        word_idx = int(rng.integers(code.code_dim))
        # realize only the sampled generator; label graphs can be large
        if g.label_pairs is not None:
            generator = pair_dense(g.label_pairs[gen_idx])
        else:
            generator = g.dense[gen_idx]
        column = s.conj().T @ (generator @ s[:, word_idx])
        cross = np.abs(column)
        cross[word_idx] = 0.0
        cross_talk = float(cross.max()) if cross.size else 0.0
        worst = max(worst, cross_talk)
        c_v = column[word_idx]
        print(
            f"trial {trial}: generator {gen_idx}, codeword {names[word_idx]}: "
            f"cross-talk {cross_talk:.3e}, c_V {c_v.real:+.6f}{c_v.imag:+.6f}j"
        )
    ok = worst < tol.absolute
    print(f"max cross-talk over {args.trials} trials: {worst:.3e} -> {'pass' if ok else 'FAIL'}")
    return 0 if ok else 1


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--oracle", choices=["labels", "gram", "both"], default="both",
                        help="dimension oracle(s) to run (default: both)")
    parser.add_argument("--tol-abs", type=float, default=1e-12,
                        help="absolute tolerance for residuals (default: 1e-12)")
    parser.add_argument("--tol-rel", type=float, default=1e-9,
                        help="relative eigenvalue cutoff for ranks (default: 1e-9)")
    parser.add_argument("--full-gram", action="store_true",
                        help="force the full Gram oracle on large label graphs")
    parser.add_argument("--subsample-size", type=int, default=200,
                        help="generator count for the subsampled Gram check (default: 200)")
    parser.add_argument("--subsample-seed", type=int, default=0,
                        help="seed for the subsampled Gram check (default: 0)")
    parser.add_argument("--deterministic", action="store_true",
                        help="zero runtime_ms so repeated runs are byte-identical")


def _add_construction_params(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, default=None, help="space factor dimension")
    parser.add_argument("--p", type=int, default=None, help="subgroup order (n = p*y)")
    parser.add_argument("--y", type=int, default=None, help="subgroup index (n = p*y)")
    parser.add_argument("--h", type=int, default=None, help="shift step minus one")
    parser.add_argument("--d", type=int, default=None, help="code dimension")
    parser.add_argument("--allow-n2", action="store_true",
                        help="permit the degenerate n=2 product construction")
    parser.add_argument("--allow-d1", action="store_true",
                        help="permit a one-dimensional code (below one qubit)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opgraph",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="verify one construction and print a report")
    verify.add_argument("construction", choices=["section2", "section3", "section4", "remark2"])
    _add_construction_params(verify)
    _add_common_flags(verify)
    verify.add_argument("--json", action="store_true", help="emit the report as JSON")

    sweep = sub.add_parser("sweep", help="verify a parameter range, one report row per point")
    sweep.add_argument("construction", choices=["section3", "section4"])
    sweep.add_argument("--n", dest="n_range", default=None, help="inclusive range A..B (section3)")
    sweep.add_argument("--n-max", type=int, default=None,
                       help="enumerate all valid (p,y,h,d) with p*y <= n-max (section4)")
    sweep.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    _add_common_flags(sweep)
    sweep.set_defaults(allow_n2=False, allow_d1=False, json=False)

    demo = sub.add_parser("demo", help="seeded random error-word distinguishability transcript")
    demo.add_argument("--construction", required=True,
                      choices=["section2", "section3", "section4"])
    _add_construction_params(demo)
    demo.add_argument("--trials", type=int, default=20)
    demo.add_argument("--seed", type=int, default=0)
    _add_common_flags(demo)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        return cmd_verify(args)
    if args.command == "sweep":
        return cmd_sweep(args)
    if args.command == "demo":
        return cmd_demo(args)
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
