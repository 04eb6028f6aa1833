"""Monotone Boolean functions encoded as integer truth tables.

A function of n variables (n <= 8) is a bit vector of length 2**n.
Position i of the truth table holds the output on the subset with index
i, where variable x_j contributes weight 2**(j-1) to the index.  The
table read left to right is the big-endian binary rendering, so for
n = 3 the string 00001111 renders as 15 and 00010111 renders as 23.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import _bits
from .errors import InputError, ResourceError

MAX_N = 8

# enumeration beyond this many variables must be requested explicitly
DEFAULT_ENUM_CAP = 6


def _check_n(n: int) -> None:
    if not 0 <= n <= MAX_N:
        raise InputError(f"variable count must be between 0 and {MAX_N}, got {n}")


@lru_cache(maxsize=None)
def _masks(n: int):
    return _bits.monotone_masks(n)


def is_monotone(value, n: int) -> bool:
    """True iff the truth table never drops when a variable is added.

    ``value`` may be the integer rendering or a sequence of 2**n bits.

    >>> is_monotone(15, 3)
    True
    >>> is_monotone(4, 2)
    False
    """
    _check_n(n)
    if not isinstance(value, int):
        bits = list(value)
        if len(bits) != (1 << n):
            raise InputError(
                f"bit vector has length {len(bits)}, expected {1 << n} for n={n}"
            )
        value = _bits.bits_to_int(bits)
    if value < 0 or value > _bits.full_mask(n):
        raise InputError(f"value {value} does not fit in a {1 << n}-bit truth table")
    for p, mask in _masks(n):
        if ((value & mask) >> p) & ~value:
            return False
    return True


class Mbf:
    """An immutable monotone Boolean function of ``n`` variables."""

    __slots__ = ("n", "value")

    def __init__(self, n: int, value: int, _checked: bool = False):
        if not _checked and not is_monotone(value, n):
            raise InputError(f"value {value} is not monotone at n={n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "value", int(value))

    def __setattr__(self, name, value):
        raise AttributeError("Mbf is immutable")

    @classmethod
    def from_bits(cls, bits, n: int) -> "Mbf":
        bits = list(bits)
        if len(bits) != (1 << n):
            raise InputError(f"expected {1 << n} bits for n={n}, got {len(bits)}")
        return cls(n, _bits.bits_to_int(bits))

    @classmethod
    def zeros(cls, n: int) -> "Mbf":
        return cls(n, 0, _checked=True)

    @classmethod
    def ones(cls, n: int) -> "Mbf":
        _check_n(n)
        return cls(n, _bits.full_mask(n), _checked=True)

    def bit(self, index: int) -> int:
        """Output on the subset with the given index."""
        if not 0 <= index < (1 << self.n):
            raise InputError(f"subset index {index} out of range for n={self.n}")
        return _bits.bit_at(self.value, index, self.n)

    def bits(self) -> list:
        return _bits.int_to_bits(self.value, self.n)

    def bitstring(self) -> str:
        return format(self.value, f"0{1 << self.n}b")

    def dual(self) -> "Mbf":
        """Reverse and complement the truth table; swaps down- and up-sets."""
        return Mbf(self.n, _bits.dual_int(self.value, self.n), _checked=True)

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mbf) and self.n == other.n and self.value == other.value
        )

    def __hash__(self) -> int:
        return hash((self.n, self.value))

    def __or__(self, other: "Mbf") -> "Mbf":
        self._same_n(other)
        return Mbf(self.n, self.value | other.value, _checked=True)

    def __and__(self, other: "Mbf") -> "Mbf":
        self._same_n(other)
        return Mbf(self.n, self.value & other.value, _checked=True)

    def __le__(self, other: "Mbf") -> bool:
        return leq(self, other)

    def _same_n(self, other: "Mbf") -> None:
        if not isinstance(other, Mbf):
            raise InputError(f"expected an Mbf, got {type(other).__name__}")
        if self.n != other.n:
            raise InputError(f"variable counts differ: {self.n} vs {other.n}")

    def __repr__(self) -> str:
        return f"Mbf(n={self.n}, {self.value})"


def leq(a: Mbf, b: Mbf) -> bool:
    """Pointwise order: every set bit of ``a`` is set in ``b``."""
    a._same_n(b)
    return (a.value | b.value) == b.value


def concat(a: Mbf, b: Mbf) -> Mbf:
    """Join two n-variable functions into one of n+1 variables.

    ``a`` becomes the half where the new variable is absent, ``b`` the
    half where it is present; monotonicity requires a <= b.
    """
    a._same_n(b)
    if not leq(a, b):
        raise InputError("concat requires the first argument below the second")
    size = 1 << a.n
    return Mbf(a.n + 1, (a.value << size) | b.value, _checked=True)


def split(f: Mbf):
    """Inverse of concat: the two n-1-variable halves of ``f``."""
    if f.n < 1:
        raise InputError("cannot split a 0-variable function")
    size = 1 << (f.n - 1)
    a = f.value >> size
    b = f.value & ((1 << size) - 1)
    return Mbf(f.n - 1, a, _checked=True), Mbf(f.n - 1, b, _checked=True)


class MbfSet:
    """A sorted, duplicate-free collection of monotone functions of one n.

    Backed by a numpy uint64 array for n <= 6 and by a tuple of Python
    integers beyond that; immutable either way.
    """

    __slots__ = ("n", "_np", "_py")

    def __init__(self, n: int, values, _sorted: bool = False):
        _check_n(n)
        object.__setattr__(self, "n", n)
        if isinstance(values, np.ndarray) and n <= 6:
            arr = values.astype(np.uint64, copy=not _sorted)
            if not _sorted:
                arr = np.unique(arr)
            arr.setflags(write=False)
            object.__setattr__(self, "_np", arr)
            object.__setattr__(self, "_py", None)
        else:
            vals = [int(v) for v in values]
            if not _sorted:
                vals = sorted(set(vals))
            if n <= 6:
                arr = np.asarray(vals, dtype=np.uint64)
                arr.setflags(write=False)
                object.__setattr__(self, "_np", arr)
                object.__setattr__(self, "_py", None)
            else:
                object.__setattr__(self, "_np", None)
                object.__setattr__(self, "_py", tuple(vals))

    def __setattr__(self, name, value):
        raise AttributeError("MbfSet is immutable")

    def values(self):
        """The backing sorted values (numpy array or tuple of ints)."""
        return self._np if self._np is not None else self._py

    def __len__(self) -> int:
        return len(self._np) if self._np is not None else len(self._py)

    def __iter__(self):
        backing = self._np if self._np is not None else self._py
        return (int(v) for v in backing)

    def __contains__(self, value) -> bool:
        value = int(value)
        if self._np is not None:
            i = int(np.searchsorted(self._np, np.uint64(value)))
            return i < len(self._np) and int(self._np[i]) == value
        import bisect

        i = bisect.bisect_left(self._py, value)
        return i < len(self._py) and self._py[i] == value

    def __getitem__(self, i) -> int:
        backing = self._np if self._np is not None else self._py
        return int(backing[i])

    def as_mbf(self, i: int) -> Mbf:
        return Mbf(self.n, self[i], _checked=True)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MbfSet)
            and self.n == other.n
            and len(self) == len(other)
            and all(a == b for a, b in zip(self, other))
        )

    def __repr__(self) -> str:
        return f"MbfSet(n={self.n}, size={len(self)})"


@lru_cache(maxsize=None)
def _dn_values(n: int) -> np.ndarray:
    """Sorted uint64 renderings of all monotone functions of n variables."""
    if n == 0:
        return np.array([0, 1], dtype=np.uint64)
    prev = _dn_values(n - 1)
    shift = np.uint64(1 << (n - 1))
    blocks = []
    for a in prev:
        above = prev[(prev & a) == a]
        blocks.append((np.uint64(a) << shift) | above)
    return np.concatenate(blocks)


def enumerate_dn(n: int, cap: int = DEFAULT_ENUM_CAP, allow_large: bool = False) -> MbfSet:
    """All monotone functions of n variables, built by the doubling rule.

    Enumeration is capped at ``cap`` variables (default 6, about 7.8
    million functions).  Pass ``allow_large=True`` to lift the cap to 7;
    expect tens of terabytes of output there, which is why the cap exists.
    """
    _check_n(n)
    limit = 7 if allow_large else cap
    if n > limit:
        raise ResourceError(
            f"enumerating D_{n} exceeds the cap of {limit}; "
            "pass allow_large=True to override"
        )
    if n <= 6:
        return MbfSet(n, _dn_values(n), _sorted=True)
    # n == 7 under allow_large: the doubling rule over Python integers
    prev = [int(v) for v in _dn_values(6)]
    out = []
    for a in prev:
        out.extend((a << 64) | b for b in prev if (a & b) == a)
    return MbfSet(7, out, _sorted=True)


def dn_count(n: int) -> int:
    """The number of monotone functions of n variables, for n <= 6."""
    return len(enumerate_dn(n))
