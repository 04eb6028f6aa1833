"""Interval counting in lattices of monotone functions.

For a sorted family F closed under pointwise min/max, the down-count of
f is |{g in F : g <= f}| and the up-count |{g in F : f <= g}|.  The key
recurrence works one fixed variable at a time: writing f = (f0, f1) for
the halves of the truth table,

    down(f) = sum over a1 in F' with a1 <= f1 of down'(min(a1, f0))

where F' is the family one level down.  Up-counts come from duality.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ._bits import dual64, dual_int
from .errors import InputError
from .mbf import Mbf, _dn_values, is_monotone

# pairwise tables larger than this fall back to per-block searchsorted
_MEET_TABLE_MAX = 8192


def exact_dot(a: np.ndarray, b: np.ndarray) -> int:
    """Exact integer dot product of two int64 vectors of counts."""
    if len(a) == 0:
        return 0
    hi = int(a.max()) * int(b.max())
    if hi <= 0:
        return 0
    chunk = max(1, min(len(a), (1 << 62) // hi))
    total = 0
    for start in range(0, len(a), chunk):
        sl = slice(start, start + chunk)
        total += int(np.sum(a[sl] * b[sl], dtype=np.int64))
    return total


def pair_downcounts(values: np.ndarray) -> np.ndarray:
    """down-counts of every element of a sorted uint64 family, by pair scan."""
    k = len(values)
    dc = np.empty(k, dtype=np.int64)
    step = max(1, (1 << 22) // max(k, 1))
    for start in range(0, k, step):
        block = values[start : start + step, None]
        dc[start : start + step] = np.count_nonzero(
            (values[None, :] & block) == values[None, :], axis=1
        )
    return dc


def dual_order_permutation(values: np.ndarray, n: int) -> np.ndarray:
    """Index array mapping each element to the position of its dual."""
    duals = dual64(values, n)
    perm = np.searchsorted(values, duals)
    if not np.array_equal(values[perm], duals):
        raise InputError("family is not closed under duality")
    return perm


def upcounts_from_downcounts(values: np.ndarray, dc: np.ndarray, n: int) -> np.ndarray:
    """up(f) = down(dual(f)) whenever the family is closed under duality."""
    return dc[dual_order_permutation(values, n)]


def extend_values(values: np.ndarray, n: int) -> np.ndarray:
    """All concatenations (a, b) with a <= b, sorted; one more fixed variable."""
    shift = np.uint64(1 << n)
    blocks = []
    for a in values:
        above = values[(values & a) == a]
        blocks.append((np.uint64(a) << shift) | above)
    return np.concatenate(blocks) if blocks else values.copy()


def _meet_downcount_table(values: np.ndarray, dc: np.ndarray) -> np.ndarray:
    """T[i, j] = down-count of values[i] & values[j]."""
    k = len(values)
    table = np.empty((k, k), dtype=np.int32)
    step = max(1, (1 << 22) // max(k, 1))
    for start in range(0, k, step):
        meets = values[start : start + step, None] & values[None, :]
        table[start : start + step] = dc[np.searchsorted(values, meets)]
    return table


def extend_with_counts(values: np.ndarray, dc: np.ndarray, n: int, progress=None):
    """One extension step carrying down-counts along.

    Returns (values', dc') for the family at n+1 variables built from all
    pairs a <= b of the given family at n variables.
    """
    k = len(values)
    if k > _MEET_TABLE_MAX:
        raise InputError(f"family of {k} elements is too large to extend with counts")
    table = _meet_downcount_table(values, dc)

    new_values = extend_values(values, n)
    new_dc = np.empty(len(new_values), dtype=np.int64)
    shift = np.uint64(1 << n)

    done = 0
    for jb in range(k):
        b = values[jb]
        below = np.flatnonzero((values & b) == values)
        sub = values[below]
        positions = np.searchsorted(new_values, (sub << shift) | np.uint64(b))
        rows = table[np.ix_(below, below)]
        new_dc[positions] = np.sum(rows, axis=1, dtype=np.int64)
        done += len(below) ** 2
        if progress is not None and (jb & 0x3FF) == 0:
            progress(jb, k, done)
    return new_values, new_dc


class _CountedFamily:
    """Internal bundle: sorted values with down- and up-counts, at n <= 6."""

    __slots__ = ("n", "values", "dc", "uc")

    def __init__(self, n: int, values: np.ndarray, dc: np.ndarray, uc: np.ndarray):
        self.n = n
        self.values = values
        self.dc = dc
        self.uc = uc

    def __len__(self) -> int:
        return len(self.values)

    def lookup_dc(self, queries: np.ndarray) -> np.ndarray:
        return self.dc[np.searchsorted(self.values, queries)]

    def lookup_uc(self, queries: np.ndarray) -> np.ndarray:
        return self.uc[np.searchsorted(self.values, queries)]


@lru_cache(maxsize=None)
def counted_dn(n: int) -> _CountedFamily:
    """The full monotone family at n <= 6 with down- and up-counts."""
    if not 0 <= n <= 6:
        raise InputError(f"counted families are kept for 0 <= n <= 6, got {n}")
    if n == 0:
        values = np.array([0, 1], dtype=np.uint64)
        dc = np.array([1, 2], dtype=np.int64)
        uc = np.array([2, 1], dtype=np.int64)
        return _CountedFamily(0, values, dc, uc)
    prev = counted_dn(n - 1)
    values, dc = extend_with_counts(prev.values, prev.dc, n - 1)
    uc = upcounts_from_downcounts(values, dc, n)
    return _CountedFamily(n, values, dc, uc)


class IntervalCounter:
    """Memoized per-query down- and up-counts over the full monotone family.

    Tables are dictionaries from function value to count, filled lazily;
    pre-populate (or guard externally) before sharing across threads.
    """

    def __init__(self, n: int):
        if not 0 <= n <= 6:
            raise InputError(f"IntervalCounter supports 0 <= n <= 6, got {n}")
        self.n = n
        self._down_memo = [dict() for _ in range(n + 1)]

    def down_count(self, f) -> int:
        """|{g monotone : g <= f}|."""
        value = int(f)
        if not is_monotone(value, self.n):
            raise InputError(f"{value} is not monotone at n={self.n}")
        return self._down(self.n, value)

    def up_count(self, f) -> int:
        """|{g monotone : f <= g}|."""
        value = int(f)
        if not is_monotone(value, self.n):
            raise InputError(f"{value} is not monotone at n={self.n}")
        return self._down(self.n, dual_int(value, self.n))

    def _down(self, level: int, value: int) -> int:
        if level == 0:
            return 1 if value == 0 else 2
        memo = self._down_memo[level]
        hit = memo.get(value)
        if hit is not None:
            return hit
        half = 1 << (level - 1)
        f0 = np.uint64(value >> half)
        f1 = np.uint64(value & ((1 << half) - 1))
        family = _dn_values(level - 1)
        below = family[(family & f1) == family]
        meets = below & f0
        keys, counts = np.unique(meets, return_counts=True)
        total = 0
        for key, repeat in zip(keys, counts):
            total += self._down(level - 1, int(key)) * int(repeat)
        memo[value] = total
        return total
