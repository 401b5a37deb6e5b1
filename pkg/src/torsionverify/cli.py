"""``verify`` command line: list suites, run one or all, write JSON reports."""

from __future__ import annotations

import argparse
import json
import sys

from .errors import BadParameters, UnknownSuite
from .report import emit_report
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="verify", description="Run finite verification suites.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("list", help="print the suite names")
    run = sub.add_parser("run", help="run a suite (or --all)")
    run.add_argument("--suite")
    run.add_argument("--all", action="store_true", help="run every suite at default parameters")
    run.add_argument("--p", type=int)
    run.add_argument("--N", type=int)
    run.add_argument("--ell", type=int)
    run.add_argument("--cases", type=int)
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--json", metavar="PATH", help="write the JSON report here")
    run.add_argument("--quiet", action="store_true", help="only print the per-suite summary line")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    if args.command == "list":
        for name in SUITES:
            print(name)
        return EXIT_OK

    if args.all == bool(args.suite):
        print("error: give exactly one of --suite NAME or --all", file=sys.stderr)
        return EXIT_USAGE
    if not 0 <= args.seed < 2**64:
        print("error: --seed must fit in an unsigned 64-bit integer", file=sys.stderr)
        return EXIT_USAGE
    names = list(SUITES) if args.all else [args.suite]
    params = {"p": args.p, "N": args.N, "ell": args.ell, "cases": args.cases}
    if args.all:
        params = {"cases": args.cases}

    reports = []
    try:
        for name in names:
            r = run_suite(name, params, args.seed)
            reports.append(r)
            if args.quiet:
                n = r.counts()
                print(f"{name}: {n['pass']} passed, {n['fail']} failed, {n['report']} report-only")
            else:
                sys.stdout.write(emit_report(r, "text").decode())
    except (UnknownSuite, BadParameters) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE

    if args.json:
        payload = reports[0].to_dict() if len(reports) == 1 and not args.all else [r.to_dict() for r in reports]
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
