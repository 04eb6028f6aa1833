"""Aggregation of cycle-type fixed-point counts into orbit counts.

The number of inequivalent monotone functions at n variables is the
average of phi over all n! variable permutations; since phi is constant
on cycle types, one row per type weighted by the type's permutation
count suffices.  Everything stays in exact integer arithmetic.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from math import factorial

from .errors import ConfigError, InputError, IntegrityError, ResourceError
from .fixpoints import Budgets, PhiResult, phi, quadrant_count_two_fixed
from .mbf import enumerate_dn
from .perms import CycleType, mu, partitions

# widely published counts of monotone functions, used as integrity checks
# and as the source for the one value this tool treats as an input (n = 8)
REFERENCE_DN = {
    0: 2,
    1: 3,
    2: 6,
    3: 20,
    4: 168,
    5: 7581,
    6: 7828354,
    7: 2414682040998,
    8: 56130437228687557907788,
}

REFERENCE_RN = {
    0: 2,
    1: 3,
    2: 5,
    3: 10,
    4: 30,
    5: 210,
    6: 16353,
    7: 490013148,
    8: 1392195548889993358,
}

# (non-trivial cycle lengths, mu, phi) in report order, plus the total
REFERENCE_ROWS = {
    7: (
        ((), 1, 2414682040998),
        ((2,), 21, 2208001624),
        ((3,), 70, 2068224),
        ((4,), 210, 60312),
        ((5,), 504, 1548),
        ((6,), 840, 766),
        ((7,), 720, 101),
        ((2, 2), 105, 67922470),
        ((2, 3), 420, 59542),
        ((2, 4), 630, 26878),
        ((2, 5), 504, 264),
        ((3, 3), 280, 69264),
        ((3, 4), 420, 294),
        ((2, 2, 2), 105, 12015832),
        ((2, 2, 3), 210, 10192),
    ),
    8: (
        ((), 1, 56130437228687557907788),
        ((2,), 28, 101627867809333596),
        ((3,), 112, 262808891710),
        ((4,), 420, 424234996),
        ((5,), 1344, 531708),
        ((6,), 3360, 144320),
        ((7,), 5760, 3858),
        ((8,), 5040, 2364),
        ((2, 2), 210, 182755441509724),
        ((2, 3), 1120, 401622018),
        ((2, 4), 2520, 93994196),
        ((2, 5), 4032, 21216),
        ((2, 6), 3360, 70096),
        ((3, 3), 1120, 535426780),
        ((3, 4), 3360, 25168),
        ((3, 5), 2688, 870),
        ((4, 4), 1260, 3211276),
        ((2, 2, 2), 420, 7377670895900),
        ((2, 2, 3), 1680, 16380370),
        ((2, 2, 4), 1260, 37834164),
        ((2, 3, 3), 1120, 3607596),
        ((2, 2, 2, 2), 105, 2038188253420),
    ),
}


class KnownConstants:
    """Known monotone-function counts, loaded from a JSON file.

    The file maps labels to decimal strings, e.g.
    ``{"d8": "56130437228687557907788"}``.  Loading re-derives the small
    counts and rejects files contradicting them.
    """

    def __init__(self, values: dict | None = None, validate: bool = True):
        self.values = {}
        for label, raw in (values or {}).items():
            if not (
                isinstance(label, str)
                and len(label) == 2
                and label[0] == "d"
                and label[1].isdigit()
            ):
                raise ConfigError(f"unknown constant label {label!r}")
            try:
                self.values[int(label[1])] = int(raw)
            except (TypeError, ValueError):
                raise ConfigError(f"constant {label} is not an integer: {raw!r}") from None
        if validate:
            self.validate()

    @classmethod
    def load(cls, path) -> "KnownConstants":
        with open(path) as handle:
            try:
                data = json.load(handle)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"constants file {path} is not valid JSON: {exc}") from None
        if not isinstance(data, dict):
            raise ConfigError(f"constants file {path} must hold a JSON object")
        return cls(data)

    @classmethod
    def bundled(cls) -> "KnownConstants":
        return cls({f"d{n}": str(v) for n, v in REFERENCE_DN.items()}, validate=False)

    def validate(self) -> None:
        for n, value in self.values.items():
            if n <= 5:
                derived = len(enumerate_dn(n))
                if value != derived:
                    raise ConfigError(
                        f"constant d{n}={value} contradicts the derived count {derived}"
                    )
            elif value != REFERENCE_DN[n]:
                raise ConfigError(
                    f"constant d{n}={value} contradicts the reference value "
                    f"{REFERENCE_DN[n]}"
                )

    def get(self, n: int):
        return self.values.get(n)


def dedekind_number(
    n: int,
    method: str = "auto",
    constants: KnownConstants | None = None,
    budgets: Budgets | None = None,
    threads: int = 1,
):
    """The count of monotone functions at n variables and how it was found.

    Counting runs up to n = 7; n = 8 is echoed from the supplied
    constants.  Returns (value, method).
    """
    if not 0 <= n <= 8:
        raise InputError(f"supported range is 0 <= n <= 8, got {n}")
    if method == "auto":
        method = "constants" if n == 8 else ("quadrant" if n == 7 else "enumerate")
    if method == "constants":
        value = constants.get(n) if constants is not None else None
        if value is None:
            raise ConfigError(
                f"d{n} must be supplied in a constants file (missing 'd{n}')"
            )
        return value, "constants"
    if method == "enumerate":
        return len(enumerate_dn(n)), "enumerate"
    if method == "quadrant":
        if n < 2:
            raise InputError("quadrant counting needs at least two variables")
        if n > 8:
            raise InputError("quadrant counting tops out at n = 8")
        if n == 8:
            raise ResourceError(
                "quadrant counting d_8 would walk 6.1e13 ordered pairs; "
                "supply d8 as a known constant instead"
            )
        return quadrant_count_two_fixed(enumerate_dn(n - 2), threads=threads), "quadrant"
    raise InputError(f"unknown method {method!r}")


@dataclass(frozen=True)
class BurnsideRow:
    cycle_type: CycleType
    mu: int
    phi: int
    strategy: str
    elapsed: float

    def to_json_dict(self) -> dict:
        return {
            "type": self.cycle_type.type_string(),
            "cycles": self.cycle_type.cycle_notation(),
            "mu": str(self.mu),
            "phi": str(self.phi),
            "strategy": self.strategy,
            "elapsed_ms": round(self.elapsed * 1000.0, 3),
        }


@dataclass(frozen=True)
class BurnsideReport:
    n: int
    rows: tuple
    total: int
    r: int

    def to_json_dict(self) -> dict:
        return {
            "n": str(self.n),
            "rows": [row.to_json_dict() for row in self.rows],
            "weighted_total": str(self.total),
            "r": str(self.r),
        }

    def to_markdown(self) -> str:
        lines = [
            "| i | cycles | mu | phi |",
            "| --- | --- | --- | --- |",
        ]
        for i, row in enumerate(self.rows, start=1):
            lines.append(
                f"| {i} | {row.cycle_type.cycle_notation()} | {row.mu} | {row.phi} |"
            )
        lines.append("")
        lines.append(f"r_{self.n} = {self.r}")
        return "\n".join(lines)

    def to_csv(self) -> str:
        lines = ["i,cycles,mu,phi,strategy,elapsed_ms"]
        for i, row in enumerate(self.rows, start=1):
            lines.append(
                f"{i},{row.cycle_type.cycle_notation()},{row.mu},{row.phi},"
                f"{row.strategy},{round(row.elapsed * 1000.0, 3)}"
            )
        lines.append(f"r,{self.n},,{self.r},,")
        return "\n".join(lines)


def table_order(types) -> list:
    """Report order: identity, single cycles by length, then mixed types."""
    return sorted(
        types, key=lambda t: (len(t.nontrivial), t.nontrivial)
    )


def required_tier(n: int) -> int:
    return 1 if n <= 6 else (2 if n == 7 else 3)


def compute_r(
    n: int,
    constants: KnownConstants | None = None,
    budgets: Budgets | None = None,
    tier: int = 3,
    threads: int = 1,
    progress=None,
) -> BurnsideReport:
    """One row per cycle type, aggregated into the orbit count r_n."""
    if not 0 <= n <= 8:
        raise InputError(f"supported range is 0 <= n <= 8, got {n}")
    if tier < required_tier(n):
        raise ResourceError(
            f"n={n} needs tier {required_tier(n)} (requested tier {tier})"
        )
    budgets = budgets or Budgets()
    rows = []
    for t in table_order(partitions(n)):
        if t.is_identity() and n == 8:
            started = time.monotonic()
            value = constants.get(8) if constants is not None else None
            if value is None:
                raise ConfigError("computing r_8 needs the constant 'd8'")
            result = PhiResult(t, n, value, "constants", time.monotonic() - started)
        else:
            result = phi(t, n, budgets=budgets, threads=threads, progress=progress)
        rows.append(BurnsideRow(t, mu(t), result.phi, result.strategy, result.elapsed))

    total = sum(row.mu * row.phi for row in rows)
    order = factorial(n)
    if total % order:
        raise IntegrityError(
            f"weighted fixed-point total {total} is not divisible by {n}! = {order}"
        )
    return BurnsideReport(n, tuple(rows), total, total // order)


def verify_report(report: BurnsideReport, reference=None) -> list:
    """Compare a report against a reference table; empty list means clean.

    ``reference`` is an iterable of (non-trivial lengths, mu, phi); the
    bundled tables for n = 7 and n = 8 are used when omitted.
    """
    if reference is None:
        reference = REFERENCE_ROWS.get(report.n)
        if reference is None:
            raise InputError(f"no bundled reference table for n={report.n}")
    expected = {tuple(sorted(key)): (int(m), int(p)) for key, m, p in reference}
    problems = []
    seen = set()
    for row in report.rows:
        key = row.cycle_type.nontrivial
        seen.add(key)
        if key not in expected:
            problems.append(f"unexpected row {row.cycle_type.cycle_notation()}")
            continue
        want_mu, want_phi = expected[key]
        if row.mu != want_mu:
            problems.append(
                f"mu mismatch at {row.cycle_type.cycle_notation()}: "
                f"{row.mu} != {want_mu}"
            )
        if row.phi != want_phi:
            problems.append(
                f"phi mismatch at {row.cycle_type.cycle_notation()}: "
                f"{row.phi} != {want_phi}"
            )
    for key in expected:
        if key not in seen:
            problems.append(f"missing row for cycle lengths {key}")
    want_total = sum(m * p for _, m, p in reference)
    if report.total != want_total:
        problems.append(f"weighted total {report.total} != {want_total}")
    return problems
