"""``lefschetz-lab`` command line: analyze | milnor | aci | sweep."""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from ..assocform import milnor_system
from ..errors import InvariantBreach, LefschetzLabError, ParseError
from ..gradedalg import MultiDegree
from ..lefschetz import DEFAULT_COEFF_BOUND
from ..polycore.field import DEFAULT_PRIME, QQ, Field
from ..polycore.parser import parse_poly
from ..polycore.poly import PolyRing
from .pipeline import EXIT_INCONSISTENT, EXIT_OK, build_report
from .sweep import run_aci, run_sweep
from .sysfile import read_system

EXIT_USAGE = 3


def _k_list(text: str) -> list:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad k list {text!r}") from None


def _field(text: str) -> Field:
    try:
        return Field.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _multidegree(text: str) -> MultiDegree:
    try:
        return MultiDegree.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(payload: dict, out: str | None):
    text = json.dumps(payload, indent=2) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _natural_key(name: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", name)]


def _infer_vars(expr: str) -> tuple:
    names = set(re.findall(r"[A-Za-z_][A-Za-z0-9_]*", expr))
    if len(names) < 3 and names <= {"x", "y", "z"}:
        return ("x", "y", "z")
    return tuple(sorted(names, key=_natural_key))


def cmd_analyze(args) -> int:
    system = read_system(args.input)
    report, code = build_report(system, args.field, args.k, args.trials, args.seed,
                                args.coeff_bound, timing=not args.no_timing)
    _emit(report, args.out)
    return code


def cmd_milnor(args) -> int:
    names = tuple(v.strip() for v in args.vars.split(",")) if args.vars else _infer_vars(args.expr)
    if len(names) < 3:
        raise ParseError(f"need at least 3 variables, found {list(names)}; pass --vars")
    f = parse_poly(args.expr, PolyRing(names, QQ))
    system = milnor_system(f)
    report, code = build_report(system, args.field, args.k, args.trials, args.seed,
                                args.coeff_bound, timing=not args.no_timing, milnor=f)
    _emit(report, args.out)
    return code


def _print_sweep(summary: dict):
    print(f"multidegree {summary['multidegree']}  T={summary['T']}  field={summary['field']}  "
          f"seed={summary['seed']}  samples={summary['samples']}")
    for o in summary["outcomes"]:
        if not o["is_ci"]:
            print(f"  #{o['index']:4d}  no CI draw after {o['attempts']} attempts")
            continue
        print(f"  #{o['index']:4d}  cond1={o['condition_smooth']!s:5}  cond2={o['condition_veronese']!s:5}  "
              f"slp1={o['slp1']}  esc={o['escalated']}")
    for key in ("ci_rate", "condition1_rate", "condition2_rate", "slp1_rate",
                "equivalence_violations", "implication_violations", "escalations"):
        print(f"{key}: {summary[key]}")


def cmd_sweep(args) -> int:
    summary = run_sweep(args.multidegree, args.samples, args.field, args.seed, args.coeff_bound,
                        args.trials, args.jobs, timing=not args.no_timing)
    if args.json or args.out:
        _emit(summary, args.out)
    if not args.json:
        _print_sweep(summary)
    bad = summary["equivalence_violations"] or summary["implication_violations"]
    return EXIT_INCONSISTENT if bad else EXIT_OK


def cmd_aci(args) -> int:
    bound = DEFAULT_COEFF_BOUND if args.coeff_bound is None else args.coeff_bound
    summary = run_aci(args.multidegree, args.samples, args.seed, bound, args.field,
                      jobs=args.jobs, timing=not args.no_timing)
    if args.json or args.out:
        _emit(summary, args.out)
    if not args.json:
        print(f"multidegree {summary['multidegree']}  T={summary['T']}  samples={summary['samples']}  "
              f"seed={summary['seed']}")
        for o in summary["outcomes"]:
            status = "pass" if o["passed"] else "; ".join(o["failures"])
            print(f"  #{o['index']:4d}  dim J(g)_(T-1)={o['dim_J_top']}  dim K_(T-1)={o['dim_K_top']}  "
                  f"dim (S/J)_(T-1)={o['quotient_dim_top']}  C1={o['C1_holds']}/{o['ell_trials']}  {status}")
        for key in ("pass_rate", "claim1_rate", "claim2_rate", "claim3_rate", "quotient_dims_on_pass",
                    "C1_rate", "veronese_miss_rate"):
            print(f"{key}: {summary[key]}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field, default=None,
                        help="q or fp:<p> (default fp:65537, aci: q); fp negatives are re-checked over q")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=20, help="random linear forms per SLP check")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--out", help="write JSON here instead of stdout")
    common.add_argument("--json", action="store_true", help="print JSON instead of a text summary")
    common.add_argument("--no-timing", action="store_true", help="omit timings (byte-stable output)")

    parser = argparse.ArgumentParser(prog="lefschetz-lab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="certify a system file")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=_k_list, help="comma-separated SLP degrees (default: all k < T/2)")
    p.add_argument("--coeff-bound", type=int, default=DEFAULT_COEFF_BOUND)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("milnor", parents=[common], help="certify the Milnor algebra of a form")
    p.add_argument("--expr", required=True)
    p.add_argument("--vars", help="comma-separated variable names (default: inferred)")
    p.add_argument("--k", type=_k_list)
    p.add_argument("--coeff-bound", type=int, default=DEFAULT_COEFF_BOUND)
    p.set_defaults(func=cmd_milnor)

    p = sub.add_parser("aci", parents=[common], help="almost complete intersections in K")
    p.add_argument("--multidegree", type=_multidegree, required=True)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--coeff-bound", type=int, default=None)
    p.set_defaults(func=cmd_aci, default_field=QQ)

    p = sub.add_parser("sweep", parents=[common], help="random complete intersections")
    p.add_argument("--multidegree", type=_multidegree, required=True)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--coeff-bound", type=int, default=None,
                   help="coefficient box (default 10 over q, uniform residues over fp)")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2, which is reserved for consistency violations
        if exc.code == 2:
            return EXIT_USAGE
        raise
    if args.field is None:
        args.field = getattr(args, "default_field", Field(DEFAULT_PRIME))
    try:
        return args.func(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantBreach as exc:
        print(f"internal consistency violation: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (LefschetzLabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
