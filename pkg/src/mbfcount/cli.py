"""Command-line interface.

Data goes to standard output, progress chatter to standard error.  Large
integers are serialized as decimal strings in JSON output so consumers
limited to 53-bit floats cannot silently truncate them.

Exit codes: 0 success, 1 verification/integrity failure, 2 usage error,
3 configuration error, 4 resource or budget error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .burnside import (
    KnownConstants,
    compute_r,
    dedekind_number,
    verify_report,
)
from .errors import ConfigError, InputError, IntegrityError, ResourceError
from .fixpoints import Budgets, phi
from .mbf import enumerate_dn
from .oracle import oracle_enum_dn, oracle_phi, oracle_r
from .perms import CycleType, canonical_perm, lift, partitions
from .posets import build_poset, count_downsets, width

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_CONFIG = 3
EXIT_RESOURCE = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mbfcount",
        description=(
            "Count monotone Boolean functions: totals per variable count, "
            "fixed points under variable permutations, and equivalence "
            "classes via Burnside's lemma."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--threads", type=int, default=os.cpu_count() or 1, help="worker count"
    )
    common.add_argument(
        "--format",
        choices=("text", "json", "csv", "markdown"),
        default="text",
        help="output format (default: text)",
    )
    common.add_argument("--constants", metavar="PATH", help="JSON file of known counts")
    common.add_argument(
        "--budget-pairs",
        type=int,
        default=Budgets.pair_budget,
        help="cap on pairwise comparisons",
    )
    common.add_argument(
        "--budget-downsets",
        type=int,
        default=Budgets.downset_budget,
        help="cap on materialized or counted downsets",
    )

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dedekind", parents=[common], help="count monotone functions")
    p.add_argument("n", type=int)

    p = sub.add_parser("phi", parents=[common], help="count fixed points of a cycle type")
    p.add_argument("n", type=int)
    p.add_argument("type", help="cycle lengths joined by '+', e.g. 2+5 (1-cycles implied)")
    p.add_argument(
        "--strategy",
        choices=("auto", "alg1", "alg2-pairs", "alg3", "quadrant"),
        default="auto",
    )

    p = sub.add_parser("r", parents=[common], help="count inequivalent monotone functions")
    p.add_argument("n", type=int)
    p.add_argument("--tier", type=int, choices=(1, 2, 3), default=2)
    p.add_argument(
        "--verify",
        action="store_true",
        help="compare the rows against the bundled reference tables (n = 7, 8)",
    )

    p = sub.add_parser("poset", parents=[common], help="inspect the orbit poset of a type")
    p.add_argument("n", type=int)
    p.add_argument("type")
    p.add_argument("--count", action="store_true", help="include the downset count")

    p = sub.add_parser("oracle-check", parents=[common], help="cross-check against brute force")
    p.add_argument("n", type=int)

    return parser


def _budgets(args) -> Budgets:
    return Budgets(pair_budget=args.budget_pairs, downset_budget=args.budget_downsets)


def _constants(args) -> KnownConstants | None:
    if args.constants is None:
        return None
    try:
        return KnownConstants.load(args.constants)
    except OSError as exc:
        raise ConfigError(f"cannot read constants file: {exc}") from None


def _emit_json(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _cmd_dedekind(args) -> int:
    started = time.monotonic()
    value, method = dedekind_number(
        args.n,
        constants=_constants(args),
        budgets=_budgets(args),
        threads=args.threads,
    )
    if args.format == "json":
        _emit_json(
            {
                "n": str(args.n),
                "d": str(value),
                "method": method,
                "elapsed_ms": round((time.monotonic() - started) * 1000.0, 3),
            }
        )
    else:
        print(value)
    return EXIT_OK


def _cmd_phi(args) -> int:
    t = CycleType.parse(args.type, args.n)
    result = phi(
        t,
        args.n,
        strategy=args.strategy,
        budgets=_budgets(args),
        threads=args.threads,
    )
    if args.format == "json":
        _emit_json(result.to_json_dict())
    else:
        print(result.phi)
        print(f"strategy: {result.strategy}", file=sys.stderr)
    return EXIT_OK


def _cmd_r(args) -> int:
    report = compute_r(
        args.n,
        constants=_constants(args),
        budgets=_budgets(args),
        tier=args.tier,
        threads=args.threads,
    )
    if args.verify:
        problems = verify_report(report)
        for problem in problems:
            print(problem, file=sys.stderr)
        if problems:
            return EXIT_VERIFY
    if args.format == "json":
        _emit_json(report.to_json_dict())
    elif args.format == "csv":
        print(report.to_csv())
    elif args.format == "markdown" or args.format == "text":
        print(report.to_markdown())
    return EXIT_OK


def _cmd_poset(args) -> int:
    t = CycleType.parse(args.type, args.n)
    poset = build_poset(lift(canonical_perm(t)))
    if args.format == "json":
        payload = {
            "n": str(args.n),
            "type": t.type_string(),
            "orbits": [list(orbit) for orbit in poset.orbits],
            "covers": [[int(i), int(j)] for i, j in poset.cover_pairs()],
            "width": str(width(poset)),
        }
        if args.count:
            payload["downsets"] = str(
                count_downsets(poset, budget=args.budget_downsets)
            )
        _emit_json(payload)
    else:
        print(poset.to_dot())
    return EXIT_OK


def _cmd_oracle_check(args) -> int:
    n = args.n
    if n > 4:
        raise InputError("oracle checks run at n <= 4")
    failures = []

    def check(label, got, expect):
        ok = got == expect
        print(f"{'ok' if ok else 'FAIL'}  {label}: {got}" + ("" if ok else f" != {expect}"))
        if not ok:
            failures.append(label)

    check(f"d_{n}", len(enumerate_dn(n)), len(oracle_enum_dn(n)))
    check(f"r_{n}", compute_r(n).r, oracle_r(n))
    for t in partitions(n):
        expect = oracle_phi(canonical_perm(t).mapping, n)
        got = phi(t, n, budgets=_budgets(args), threads=args.threads).phi
        check(f"phi({t.type_string()}, {n})", got, expect)
    if failures:
        print(f"first failure: {failures[0]}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


_COMMANDS = {
    "dedekind": _cmd_dedekind,
    "phi": _cmd_phi,
    "r": _cmd_r,
    "poset": _cmd_poset,
    "oracle-check": _cmd_oracle_check,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ResourceError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except IntegrityError as exc:
        print(f"integrity error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
