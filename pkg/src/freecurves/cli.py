"""Command-line front end: ``freecurves analyze|enumerate|verify|bound``."""
from __future__ import annotations

import argparse
import json
import sys

from .ade import parse_types
from .combinatorics import (
    EXCLUDED,
    arnold_exponent,
    enumerate_weak_combinatorics,
    hirzebruch_holds,
    maximizing_feasibility,
    mdr_lower_bound,
)
from .expr import ParseError
from .field import UnsupportedFieldExtension
from .invariants import maximizing_tau, required_mdr_for_maximizing
from .report import CurveFileError, build_report, load_curve_file, render_table, to_json
from .verification import run_verification, summarize

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_FIELD = 3
EXIT_INCOMPLETE = 4


def _fail(msg: str, code: int) -> int:
    print(f"freecurves: {msg}", file=sys.stderr)
    return code


def cmd_analyze(args) -> int:
    try:
        cf = load_curve_file(args.path)
        report = build_report(cf, local=not args.no_local)
    except UnsupportedFieldExtension as exc:
        return _fail(f"unsupported field extension: {exc}", EXIT_FIELD)
    except (ParseError, CurveFileError, OSError, UnicodeDecodeError) as exc:
        return _fail(str(exc), EXIT_PARSE)
    except ValueError as exc:
        # invalid arrangement or non-homogeneous curve
        return _fail(f"invalid input: {exc}", EXIT_PARSE)
    sys.stdout.write(to_json(report) if args.json else render_table(report))
    if args.strict and report["complete"] is False:
        return _fail("classification incomplete (non-ADE or unresolved points)", EXIT_INCOMPLETE)
    return EXIT_OK


def _annotate(wc, filters):
    verdicts = {}
    if "hirzebruch" in filters:
        verdicts["hirzebruch"] = hirzebruch_holds(wc)
    if "lct-bound" in filters:
        verdicts["lct-bound"] = maximizing_feasibility(wc, wc.degree)
    return verdicts


def _passes(verdicts) -> bool:
    return verdicts.get("hirzebruch", True) and verdicts.get("lct-bound") != EXCLUDED


def cmd_enumerate(args) -> int:
    ks = args.conics or [1]
    filters = args.filter or []
    results = []
    for k in sorted(set(ks)):
        for wc in enumerate_weak_combinatorics(k, args.degree):
            results.append((wc, _annotate(wc, filters)))
    if args.json:
        payload = {
            "degree": args.degree,
            "conics": sorted(set(ks)),
            "filters": filters,
            "count": len(results),
            "passing": sum(_passes(v) for _, v in results),
            "tuples": [
                {"k": wc.k, "d": wc.d, "counts": list(wc.counts), **{"verdicts": v}}
                for wc, v in results
            ],
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
        return EXIT_OK
    kept = [(wc, v) for wc, v in results if _passes(v)]
    for wc, v in kept:
        tag = "  " + " ".join(f"{name}={val}" for name, val in v.items()) if v else ""
        print(f"k={wc.k} d={wc.d} {wc}{tag}")
    if filters:
        print(f"{len(kept)} of {len(results)} tuples pass {' + '.join(filters)}")
    else:
        print(f"{len(results)} tuples")
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = run_verification()
    sys.stdout.write(summarize(checks))
    return EXIT_OK if all(c.ok for c in checks) else EXIT_VERIFY_FAILED


def cmd_bound(args) -> int:
    try:
        types = parse_types(args.types)
        if not types:
            raise ValueError("empty type list")
        alpha = arnold_exponent(types)
        bound = mdr_lower_bound(args.degree, types)
    except ValueError as exc:
        return _fail(str(exc), EXIT_PARSE)
    print(f"types       {','.join(t.name for t in types)}")
    print(f"alpha       {alpha}")
    print(f"mdr bound   {bound}")
    try:
        maximizing_tau(args.degree)
    except ValueError:
        print("required    - (no maximizing Tjurina number in this degree)")
        return EXIT_OK
    required = required_mdr_for_maximizing(args.degree)
    print(f"required    {required}")
    print(f"verdict     {'infeasible' if bound > required else 'open'}")
    return EXIT_OK


def _conics(value: str) -> int:
    k = int(value)
    if k not in (1, 2, 3):
        raise argparse.ArgumentTypeError("number of conics must be 1, 2 or 3")
    return k


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="freecurves",
        description="Exact invariants of plane curves and conic-line arrangements.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="invariants and singularities of a curve file")
    a.add_argument("path")
    a.add_argument("--json", action="store_true", help="machine-readable report")
    a.add_argument("--strict", action="store_true",
                   help="exit 4 if some point is non-ADE or unresolved")
    a.add_argument("--no-local", action="store_true", help="skip point classification")
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("enumerate", help="weak combinatorics of maximizing septics")
    e.add_argument("--conics", type=_conics, action="append", metavar="K")
    e.add_argument("--filter", action="append", choices=("hirzebruch", "lct-bound"))
    e.add_argument("--degree", type=int, default=7, help=argparse.SUPPRESS)
    e.add_argument("--json", action="store_true",
                   help="annotate every tuple with its filter verdicts")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", aliases=["verify-paper"], help="recompute all reference values")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bound", help="lct lower bound on mdr")
    b.add_argument("--degree", type=int, required=True)
    b.add_argument("--types", required=True, help="comma separated, e.g. A1,D8")
    b.set_defaults(func=cmd_bound)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
