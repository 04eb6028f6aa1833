"""Fixed-point counting strategies and the dispatcher behind phi.

Four routes produce the number of monotone functions fixed by a lifted
variable permutation:

* downset generation over the orbit poset (direct, written length = n);
* pair counting over the fixed set one variable down;
* a quadrant split against the swap of the two top variables, walking
  a base family and counting compatible top/bottom quadrants;
* a quadrant split with two fixed top variables, walking ordered pairs.

All of them agree with the brute-force oracle wherever it runs; the
dispatcher picks the cheapest admissible one.
"""

from __future__ import annotations

import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _bits
from .errors import InputError, IntegrityError, ResourceError
from .intervals import (
    _CountedFamily,
    counted_dn,
    exact_dot,
    extend_with_counts,
    pair_downcounts,
    upcounts_from_downcounts,
)
from .mbf import Mbf, MbfSet, _dn_values
from .perms import CycleType, VarPerm, canonical_perm, lift
from .posets import (
    DEFAULT_DOWNSET_BUDGET,
    build_poset,
    count_downsets,
    enumerate_downsets,
    width,
)

DEFAULT_PAIR_BUDGET = 10**13

_PROGRESS_STEP = 1 << 20

STRATEGIES = (
    "alg1-enumerate",
    "alg1-count",
    "alg2-pairs",
    "alg3-split",
    "quadrant-two-fixed",
    "oracle",
)


@dataclass(frozen=True)
class Budgets:
    """Caps on the work a strategy may attempt."""

    pair_budget: int = DEFAULT_PAIR_BUDGET
    downset_budget: int = DEFAULT_DOWNSET_BUDGET

    def __post_init__(self):
        if self.pair_budget <= 0 or self.downset_budget <= 0:
            raise InputError("budgets must be positive")


@dataclass(frozen=True)
class PhiResult:
    """An exact fixed-point count together with how it was obtained."""

    cycle_type: CycleType
    n: int
    phi: int
    strategy: str
    elapsed: float

    def to_json_dict(self) -> dict:
        return {
            "type": self.cycle_type.type_string(),
            "n": str(self.n),
            "phi": str(self.phi),
            "strategy": self.strategy,
            "elapsed_ms": round(self.elapsed * 1000.0, 3),
        }


@dataclass(frozen=True)
class FixSet:
    """The fixed monotone functions of a cycle type at some n, materialized."""

    n: int
    cycle_type: CycleType
    functions: MbfSet

    def __len__(self) -> int:
        return len(self.functions)

    def __iter__(self):
        return iter(self.functions)


def _emit_progress(progress, done: int, total: int) -> None:
    if progress is not None:
        progress(done, total)
    elif total >= 2 * _PROGRESS_STEP:
        print(f"  progress: {done}/{total} ({100 * done // total}%)", file=sys.stderr)


# ---------------------------------------------------------------------------
# fixed sets as value arrays, with caching

_chain_cache: dict = {}


def clear_caches() -> None:
    _chain_cache.clear()


def _orbit_value_list(poset, downsets) -> list:
    """Map downset bitmasks to function values: the downset is the 0-region."""
    size = 1 << poset.n
    full = (1 << size) - 1
    orbit_masks = [
        sum(1 << (size - 1 - i) for i in orbit) for orbit in poset.orbits
    ]
    values = []
    for d in downsets:
        zeros = 0
        while d:
            low = d & -d
            zeros |= orbit_masks[low.bit_length() - 1]
            d ^= low
        values.append(full ^ zeros)
    return values


def _alg1_values(perm: VarPerm, budget: int) -> list:
    poset = build_poset(lift(perm))
    downsets = enumerate_downsets(poset, budget=budget)
    return sorted(_orbit_value_list(poset, downsets))


def counted_fix_family(perm: VarPerm, level: int, budget: int = DEFAULT_DOWNSET_BUDGET) -> _CountedFamily:
    """Fixed functions of ``perm`` embedded at ``level`` variables, with counts.

    The permutation must only move variables up to ``level``; results are
    cached per (permutation, level).  Levels above 6 are not supported
    here (they would not fit the packed-array kernels).
    """
    moved = perm.max_moved()
    if moved > level:
        raise InputError(f"permutation moves x_{moved}, above level {level}")
    if level > 6:
        raise ResourceError("counted families are limited to 6 variables")
    if moved == 0:
        return counted_dn(level)
    key = (perm.restrict(moved).mapping, level)
    hit = _chain_cache.get(key)
    if hit is not None:
        return hit
    if level == moved:
        values = np.asarray(_alg1_values(perm.restrict(moved), budget), dtype=np.uint64)
        dc = pair_downcounts(values)
    else:
        prev = counted_fix_family(perm, level - 1, budget)
        values, dc = extend_with_counts(prev.values, prev.dc, level - 1)
    uc = upcounts_from_downcounts(values, dc, level)
    family = _CountedFamily(level, values, dc, uc)
    _chain_cache[key] = family
    return family


def _fix_values_python(perm: VarPerm, level: int, budget: int) -> list:
    """Fixed-function values at levels 7 and 8, as Python integers."""
    moved = perm.max_moved()
    if moved == level:
        return _alg1_values(perm.restrict(moved), budget)
    if level - 1 <= 6:
        base = counted_fix_family(perm, level - 1, budget).values
        prev = [int(v) for v in base]
    else:
        prev = _fix_values_python(perm, level - 1, budget)
    expected = _count_pairs_values(prev, level - 1)
    if expected > budget:
        raise ResourceError(
            f"fixed set at {level} variables holds {expected} elements (> {budget})"
        )
    size = 1 << (level - 1)
    out = []
    for a in prev:
        out.extend((a << size) | b for b in prev if (a & b) == a)
    return sorted(out)


def fix_values(t: CycleType, n: int, budget: int = DEFAULT_DOWNSET_BUDGET):
    """Sorted value sequence of the fixed set of ``t`` at ``n`` variables."""
    perm = canonical_perm(t.repad(n))
    if n <= 6:
        return counted_fix_family(perm, n, budget).values
    return _fix_values_python(perm, n, budget)


# ---------------------------------------------------------------------------
# the four public strategies

def alg1_fixset(t: CycleType, n: int | None = None, budget: int = DEFAULT_DOWNSET_BUDGET) -> FixSet:
    """Fixed set via downsets of the orbit poset of the lifted permutation."""
    n = t.n if n is None else n
    t = t.repad(n)
    values = _alg1_values(canonical_perm(t), budget)
    return FixSet(n, t, MbfSet(n, values, _sorted=True))


def alg2_extend(fs: FixSet, budget: int = DEFAULT_DOWNSET_BUDGET) -> FixSet:
    """Fixed set one variable up: all concatenations a <= b within ``fs``."""
    values = list(fs.functions)
    pairs = _count_pairs_values(values, fs.n)
    if pairs > budget:
        raise ResourceError(
            f"extension would hold {pairs} functions (> {budget}); "
            "use alg2_count_pairs for the cardinality alone"
        )
    size = 1 << fs.n
    out = []
    for a in values:
        out.extend((a << size) | b for b in values if (a & b) == a)
    return FixSet(
        fs.n + 1, fs.cycle_type.repad(fs.n + 1), MbfSet(fs.n + 1, sorted(out), _sorted=True)
    )


def _count_pairs_values(values, n: int, progress=None) -> int:
    """|{(a, b) : a <= b}| over a value sequence at n variables."""
    k = len(values)
    if k == 0:
        return 0
    if n <= 6:
        arr = np.asarray(values, dtype=np.uint64)
        total = 0
        step = max(1, (1 << 22) // k)
        for start in range(0, k, step):
            block = arr[start : start + step, None]
            total += int(
                np.count_nonzero((arr[None, :] & block) == block, axis=1).sum()
            )
            _emit_progress(progress, min(start + step, k), k)
        return total
    if n == 7:
        lo = np.asarray([v & ((1 << 64) - 1) for v in values], dtype=np.uint64)
        hi = np.asarray([v >> 64 for v in values], dtype=np.uint64)
        total = 0
        for i in range(k):
            above = ((lo & lo[i]) == lo[i]) & ((hi & hi[i]) == hi[i])
            total += int(np.count_nonzero(above))
            if (i & (_PROGRESS_STEP - 1)) == 0:
                _emit_progress(progress, i, k)
        return total
    total = 0
    for a in values:
        total += sum(1 for b in values if (a & b) == a)
    return total


def alg2_count_pairs(fs: FixSet, progress=None) -> int:
    """Cardinality of the extension without materializing it."""
    return _count_pairs_values(list(fs.functions), fs.n, progress)


def _position_map(perm: VarPerm):
    return lift(perm).position_map()


def _strict_lookup(family: _CountedFamily, queries: np.ndarray, counts: np.ndarray) -> np.ndarray:
    idx = np.searchsorted(family.values, queries)
    idx = np.minimum(idx, len(family.values) - 1)
    if not np.array_equal(family.values[idx], queries):
        raise IntegrityError("query outside the fixed family; orientation bug")
    return counts[idx]


def _alg3_kernel(
    inner: VarPerm,
    family: _CountedFamily,
    base: np.ndarray,
    threads: int = 1,
    progress=None,
) -> int:
    """Sum over the base family of down(beta & gamma) * up(beta | gamma)."""
    level = family.n
    if inner.max_moved() == 0:
        return exact_dot(family.dc, family.uc)
    pos_map = _position_map(inner.restrict(level) if inner.n != level else inner)
    total_rows = len(base)

    def run_chunk(start: int, stop: int) -> int:
        beta = base[start:stop]
        gamma = _bits.apply_position_map(beta, pos_map, level)
        down = _strict_lookup(family, beta & gamma, family.dc)
        up = _strict_lookup(family, beta | gamma, family.uc)
        return exact_dot(down, up)

    return _chunked_total(run_chunk, total_rows, threads, progress)


def _quadrant_kernel(
    family: _CountedFamily, threads: int = 1, progress=None
) -> int:
    """Sum over ordered pairs of down(meet) * up(join) within the family."""
    values = family.values
    k = len(values)

    def run_chunk(start: int, stop: int) -> int:
        subtotal = 0
        for i in range(start, stop):
            beta = values[i]
            down = _strict_lookup(family, values & beta, family.dc)
            up = _strict_lookup(family, values | beta, family.uc)
            subtotal += exact_dot(down, up)
        return subtotal

    return _chunked_total(run_chunk, k, threads, progress, chunk=256)


def _chunked_total(run_chunk, total_rows: int, threads: int, progress, chunk: int = 1 << 18) -> int:
    spans = [
        (start, min(start + chunk, total_rows)) for start in range(0, total_rows, chunk)
    ]
    total = 0
    if threads <= 1 or len(spans) <= 1:
        done = 0
        for start, stop in spans:
            total += run_chunk(start, stop)
            done = stop
            if done % _PROGRESS_STEP < chunk:
                _emit_progress(progress, done, total_rows)
        return total
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(run_chunk, start, stop) for start, stop in spans]
        for i, fut in enumerate(futures):
            total += fut.result()
            _emit_progress(progress, min((i + 1) * chunk, total_rows), total_rows)
    return total


def alg3_count(
    inner_type: CycleType,
    fixed: FixSet,
    base: MbfSet,
    threads: int = 1,
    progress=None,
) -> int:
    """Fixed points two variables up, with a swap on the two new variables.

    ``fixed`` must be the fixed set of the inner type at n variables and
    ``base`` the admissible bottom/top quadrant family: the full family
    when the inner permutation is an involution, otherwise the fixed set
    of its square.
    """
    if fixed.n != base.n:
        raise InputError(f"variable counts differ: {fixed.n} vs {base.n}")
    level = fixed.n
    inner = canonical_perm(inner_type.repad(level))
    if level > 6:
        raise ResourceError("the split strategy runs its base walks at up to 6 variables")
    family = counted_fix_family(inner, level)
    given = np.asarray(list(fixed.functions), dtype=np.uint64)
    if not np.array_equal(family.values, given):
        raise InputError("fixed set does not match the inner type")
    return _alg3_kernel(
        inner, family, np.asarray(list(base), dtype=np.uint64), threads, progress
    )


def quadrant_count_two_fixed(fixed, threads: int = 1, progress=None) -> int:
    """Fixed points two variables up, the new variables held fixed.

    Accepts a FixSet or MbfSet; with the full family this yields the
    total count of monotone functions two variables higher.
    """
    functions = fixed.functions if isinstance(fixed, FixSet) else fixed
    level = functions.n
    if level > 6:
        raise ResourceError("quadrant counting runs at up to 6 variables")
    values = np.asarray(list(functions), dtype=np.uint64)
    dc = pair_downcounts(values)
    uc = upcounts_from_downcounts(values, dc, level)
    family = _CountedFamily(level, values, dc, uc)
    return _quadrant_kernel(family, threads, progress)


# ---------------------------------------------------------------------------
# dispatcher

def phi(
    t: CycleType,
    n: int | None = None,
    strategy: str = "auto",
    budgets: Budgets | None = None,
    threads: int = 1,
    progress=None,
) -> PhiResult:
    """Exact number of fixed monotone functions of the type at n variables."""
    n = t.n if n is None else n
    if not 0 <= n <= 8:
        raise InputError(f"phi supports 0 <= n <= 8, got {n}")
    if t.written_total > n:
        raise InputError(f"type {t} does not fit in {n} variables")
    t = t.repad(n)
    budgets = budgets or Budgets()

    started = time.monotonic()
    value, used = _dispatch(t, n, strategy, budgets, threads, progress)
    return PhiResult(t, n, value, used, time.monotonic() - started)


def _dispatch(t, n, strategy, budgets, threads, progress):
    if strategy == "auto":
        return _auto_phi(t, n, budgets, threads, progress)
    if strategy in ("alg1", "alg1-count"):
        return _phi_alg1_count(t, n, budgets), "alg1-count"
    if strategy == "alg1-enumerate":
        fs = alg1_fixset(t, n, budgets.downset_budget)
        return len(fs), "alg1-enumerate"
    if strategy == "alg2-pairs":
        return _phi_alg2_pairs(t, n, budgets, progress), "alg2-pairs"
    if strategy in ("alg3", "alg3-split"):
        return _phi_alg3(t, n, budgets, threads, progress), "alg3-split"
    if strategy in ("quadrant", "quadrant-two-fixed"):
        return _phi_quadrant(t, n, budgets, threads, progress), "quadrant-two-fixed"
    if strategy == "oracle":
        from .oracle import oracle_phi

        return oracle_phi(canonical_perm(t).mapping, n), "oracle"
    raise InputError(f"unknown strategy {strategy!r}")


def _auto_phi(t, n, budgets, threads, progress):
    attempts = []
    if n == 0 or t.written_total == n:
        try:
            return _phi_alg1_count(t, n, budgets), "alg1-count"
        except ResourceError as exc:
            attempts.append(f"alg1-count: {exc}")
    if t.written_total == n - 1:
        try:
            return _phi_alg2_pairs(t, n, budgets, progress), "alg2-pairs"
        except ResourceError as exc:
            attempts.append(f"alg2-pairs: {exc}")
    if t.has_two_cycle() and t.written_total <= n:
        try:
            return _phi_alg3(t, n, budgets, threads, progress), "alg3-split"
        except ResourceError as exc:
            attempts.append(f"alg3-split: {exc}")
    if t.written_total <= n - 2:
        try:
            return _phi_quadrant(t, n, budgets, threads, progress), "quadrant-two-fixed"
        except ResourceError as exc:
            attempts.append(f"quadrant-two-fixed: {exc}")
    raise ResourceError(
        "no strategy fits the budgets; attempts: " + "; ".join(attempts)
        if attempts
        else f"no strategy applies to type {t} at n={n}"
    )


def _phi_alg1_count(t, n, budgets) -> int:
    if n > 0 and t.written_total != n:
        raise InputError(
            f"direct downset counting needs a type of written length {n}, got {t}"
        )
    poset = build_poset(lift(canonical_perm(t.repad(n))))
    w = width(poset)
    if (1 << w) > budgets.downset_budget:
        raise ResourceError(
            f"downset count is at least 2^{w}, beyond the budget of "
            f"{budgets.downset_budget}"
        )
    return count_downsets(poset, budget=budgets.downset_budget)


def _phi_alg2_pairs(t, n, budgets, progress) -> int:
    if t.written_total > n - 1:
        raise InputError(f"pair counting needs written length below {n}, got {t}")
    level = n - 1
    count = _fix_count_cheap(t, level, budgets)
    if count is not None and count * count > budgets.pair_budget:
        raise ResourceError(
            f"{count}^2 pair comparisons exceed the budget of {budgets.pair_budget}"
        )
    values = fix_values(t, level, budgets.downset_budget)
    if len(values) ** 2 > budgets.pair_budget:
        raise ResourceError(
            f"{len(values)}^2 pair comparisons exceed the budget of {budgets.pair_budget}"
        )
    return _count_pairs_values([int(v) for v in values], level, progress)


def _fix_count_cheap(t, level, budgets):
    """The fixed-set size at ``level`` when it is cheap to know in advance."""
    if t.written_total == level:
        try:
            return _phi_alg1_count(t, level, budgets)
        except ResourceError:
            return None
    return None


def _phi_alg3(t, n, budgets, threads, progress) -> int:
    if not t.has_two_cycle():
        raise InputError(f"the split strategy needs a 2-cycle in the type, got {t}")
    if n < 2:
        raise InputError("the split strategy needs at least two variables")
    level = n - 2
    if level > 6:
        raise ResourceError("the split strategy runs its base walks at up to 6 variables")
    inner_type = t.drop_two_cycle(level)
    inner = canonical_perm(inner_type)
    family = counted_fix_family(inner, level, budgets.downset_budget)
    square = inner.compose(inner)
    if square.max_moved() == 0:
        base = _dn_values(level)
    else:
        base = counted_fix_family(square, level, budgets.downset_budget).values
    return _alg3_kernel(inner, family, base, threads, progress)


def _phi_quadrant(t, n, budgets, threads, progress) -> int:
    if t.written_total > n - 2:
        raise InputError(
            f"two-fixed-variable counting needs written length at most {n - 2}, got {t}"
        )
    level = n - 2
    if level > 6:
        raise ResourceError("quadrant counting runs at up to 6 variables")
    if t.is_identity():
        size = len(_dn_values(level)) if level <= 6 else None
        if size is not None and size * size > budgets.pair_budget:
            raise ResourceError(
                f"{size}^2 ordered pairs exceed the budget of {budgets.pair_budget}"
            )
        family = counted_dn(level)
    else:
        family = counted_fix_family(canonical_perm(t.repad(level)), level, budgets.downset_budget)
        if len(family) ** 2 > budgets.pair_budget:
            raise ResourceError(
                f"{len(family)}^2 ordered pairs exceed the budget of {budgets.pair_budget}"
            )
    return _quadrant_kernel(family, threads, progress)
