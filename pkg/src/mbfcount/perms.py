"""Cycle types, variable permutations, and their lift to subset indices."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from ._bits import bit_at
from .errors import InputError
from .mbf import MAX_N, Mbf


@dataclass(frozen=True)
class CycleType:
    """A partition of n into cycle lengths, 1-cycles explicit.

    ``written_total`` is the number of variables covered by the
    non-trivial cycles, e.g. 5 for the type of (x1 x2)(x3 x4 x5).
    """

    n: int
    lengths: tuple = field(default=())

    def __post_init__(self):
        lengths = tuple(sorted((int(l) for l in self.lengths), reverse=True))
        if any(l < 1 for l in lengths):
            raise InputError(f"cycle lengths must be positive: {self.lengths}")
        if sum(lengths) != self.n:
            raise InputError(
                f"cycle lengths {self.lengths} do not sum to n={self.n}"
            )
        object.__setattr__(self, "lengths", lengths)

    @property
    def written_total(self) -> int:
        return sum(l for l in self.lengths if l > 1)

    @property
    def nontrivial(self) -> tuple:
        """Non-trivial cycle lengths, shortest first, as the tables write them."""
        return tuple(sorted(l for l in self.lengths if l > 1))

    def is_identity(self) -> bool:
        return self.written_total == 0

    def has_two_cycle(self) -> bool:
        return 2 in self.lengths

    def drop_two_cycle(self, new_n: int) -> "CycleType":
        """The type with one 2-cycle removed, repadded to ``new_n`` variables."""
        if not self.has_two_cycle():
            raise InputError(f"type {self} has no 2-cycle to drop")
        rest = list(self.lengths)
        rest.remove(2)
        rest = [l for l in rest if l > 1]
        if sum(rest) > new_n:
            raise InputError(f"cycles {rest} do not fit in {new_n} variables")
        return CycleType.of(new_n, rest)

    def repad(self, new_n: int) -> "CycleType":
        return CycleType.of(new_n, self.nontrivial)

    @classmethod
    def of(cls, n: int, nontrivial_lengths) -> "CycleType":
        """Build a type from its non-trivial cycle lengths, padding with 1s."""
        lengths = [int(l) for l in nontrivial_lengths]
        pad = n - sum(lengths)
        if pad < 0:
            raise InputError(f"cycles {lengths} do not fit in {n} variables")
        return cls(n, tuple(lengths) + (1,) * pad)

    @classmethod
    def parse(cls, text: str, n: int) -> "CycleType":
        """Parse the '+'-joined syntax, e.g. "3+2" (1-cycles implied)."""
        text = text.strip()
        try:
            lengths = [int(part) for part in text.split("+")] if text else []
        except ValueError:
            raise InputError(f"cannot parse cycle type {text!r}") from None
        if any(l < 1 for l in lengths):
            raise InputError(f"cycle lengths must be positive in {text!r}")
        return cls.of(n, [l for l in lengths if l > 1])

    def type_string(self) -> str:
        """The '+'-joined non-trivial lengths ("1" for the identity)."""
        return "+".join(str(l) for l in self.nontrivial) or "1"

    def cycle_notation(self) -> str:
        """Table-style notation such as "(12)(345)"; "(1)" for the identity."""
        parts = []
        start = 1
        for l in self.nontrivial:
            parts.append("(" + "".join(str(v) for v in range(start, start + l)) + ")")
            start += l
        return "".join(parts) or "(1)"

    def __str__(self) -> str:
        return self.type_string()


def partitions(n: int):
    """All partitions of n as CycleTypes, descending parts, reverse-lex order.

    n = 0 yields the single empty type so that Burnside aggregation has an
    identity row to work with.
    """
    if not 0 <= n <= MAX_N:
        raise InputError(f"partitions defined for 0 <= n <= {MAX_N}, got {n}")
    if n == 0:
        return [CycleType(0, ())]

    out = []

    def descend(remaining, largest, prefix):
        if remaining == 0:
            out.append(CycleType(n, tuple(prefix)))
            return
        for part in range(min(remaining, largest), 0, -1):
            descend(remaining - part, part, prefix + [part])

    descend(n, n, [])
    return out


def mu(t: CycleType) -> int:
    """Number of permutations with cycle type ``t`` (1-cycles included)."""
    denom = 1
    for length, count in Counter(t.lengths).items():
        denom *= length**count * math.factorial(count)
    return math.factorial(t.n) // denom


class VarPerm:
    """A permutation of the variables x_1..x_n; entry j-1 gives pi(j)."""

    __slots__ = ("n", "mapping")

    def __init__(self, mapping):
        mapping = tuple(int(v) for v in mapping)
        n = len(mapping)
        if sorted(mapping) != list(range(1, n + 1)):
            raise InputError(f"not a permutation of 1..{n}: {mapping}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mapping", mapping)

    def __setattr__(self, name, value):
        raise AttributeError("VarPerm is immutable")

    @classmethod
    def identity(cls, n: int) -> "VarPerm":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "VarPerm":
        mapping = list(range(1, n + 1))
        for cycle in cycles:
            cycle = list(cycle)
            for i, v in enumerate(cycle):
                if not 1 <= v <= n:
                    raise InputError(f"variable {v} out of range 1..{n}")
                mapping[v - 1] = cycle[(i + 1) % len(cycle)]
        perm = cls(mapping)
        return perm

    def __call__(self, j: int) -> int:
        return self.mapping[j - 1]

    def compose(self, other: "VarPerm") -> "VarPerm":
        """self after other: (self*other)(j) = self(other(j))."""
        if self.n != other.n:
            raise InputError("cannot compose permutations of different sizes")
        return VarPerm(self.mapping[other.mapping[j - 1] - 1] for j in range(1, self.n + 1))

    def inverse(self) -> "VarPerm":
        inv = [0] * self.n
        for j, v in enumerate(self.mapping, start=1):
            inv[v - 1] = j
        return VarPerm(inv)

    def cycle_type(self) -> CycleType:
        lengths = []
        seen = [False] * self.n
        for j in range(1, self.n + 1):
            if seen[j - 1]:
                continue
            length = 0
            k = j
            while not seen[k - 1]:
                seen[k - 1] = True
                k = self.mapping[k - 1]
                length += 1
            lengths.append(length)
        return CycleType(self.n, tuple(lengths))

    def max_moved(self) -> int:
        """Largest variable index not fixed by the permutation (0 if identity)."""
        for j in range(self.n, 0, -1):
            if self.mapping[j - 1] != j:
                return j
        return 0

    def restrict(self, m: int) -> "VarPerm":
        """The same permutation viewed on x_1..x_m; requires x_{m+1}.. fixed."""
        if self.max_moved() > m:
            raise InputError(f"permutation moves variables above {m}")
        return VarPerm(self.mapping[:m])

    def __eq__(self, other) -> bool:
        return isinstance(other, VarPerm) and self.mapping == other.mapping

    def __hash__(self) -> int:
        return hash(self.mapping)

    def __repr__(self) -> str:
        return f"VarPerm{self.mapping}"


def canonical_perm(t: CycleType) -> VarPerm:
    """The representative permutation with cycles on consecutive variables.

    Cycles are laid out shortest first starting from x_1, matching the
    table notation (type 2+3 becomes (x1 x2)(x3 x4 x5)); remaining
    variables stay fixed.
    """
    cycles = []
    start = 1
    for l in t.nontrivial:
        cycles.append(tuple(range(start, start + l)))
        start += l
    return VarPerm.from_cycles(t.n, cycles)


class BitPerm:
    """A permutation of the 2**n subset indices of the variable power set."""

    __slots__ = ("n", "mapping")

    def __init__(self, n: int, mapping):
        mapping = tuple(int(v) for v in mapping)
        if len(mapping) != (1 << n) or sorted(mapping) != list(range(1 << n)):
            raise InputError(f"not a permutation of 0..{(1 << n) - 1}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mapping", mapping)

    def __setattr__(self, name, value):
        raise AttributeError("BitPerm is immutable")

    @classmethod
    def identity(cls, n: int) -> "BitPerm":
        return cls(n, range(1 << n))

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def compose(self, other: "BitPerm") -> "BitPerm":
        if self.n != other.n:
            raise InputError("cannot compose bit permutations of different sizes")
        return BitPerm(self.n, (self.mapping[other.mapping[i]] for i in range(1 << self.n)))

    def inverse(self) -> "BitPerm":
        inv = [0] * (1 << self.n)
        for i, v in enumerate(self.mapping):
            inv[v] = i
        return BitPerm(self.n, inv)

    def cycles(self):
        """Disjoint cycles, each starting at its minimum, sorted by minimum."""
        seen = [False] * (1 << self.n)
        out = []
        for i in range(1 << self.n):
            if seen[i]:
                continue
            cycle = []
            k = i
            while not seen[k]:
                seen[k] = True
                cycle.append(k)
                k = self.mapping[k]
            out.append(tuple(cycle))
        return out

    def cycle_string(self) -> str:
        """Notation like "(0)(1 2 4)(3 6 5)(7)"."""
        return "".join(
            "(" + " ".join(str(v) for v in cycle) + ")" for cycle in self.cycles()
        )

    def position_map(self) -> tuple:
        """The induced permutation of rendered bit positions.

        Subset index i sits at bit position ~i (within n bits), so the
        position map is the conjugate of the subset map by complement.
        """
        full = (1 << self.n) - 1
        return tuple(full ^ self.mapping[full ^ q] for q in range(1 << self.n))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitPerm)
            and self.n == other.n
            and self.mapping == other.mapping
        )

    def __hash__(self) -> int:
        return hash((self.n, self.mapping))

    def __repr__(self) -> str:
        return f"BitPerm(n={self.n}, {self.cycle_string()})"


def lift(p: VarPerm) -> BitPerm:
    """Lift a variable permutation to the 2**n subset indices."""
    n = p.n
    weights = [1 << (p(j) - 1) for j in range(1, n + 1)]
    mapping = []
    for i in range(1 << n):
        image = 0
        for j in range(n):
            if (i >> j) & 1:
                image |= weights[j]
        mapping.append(image)
    return BitPerm(n, mapping)


def apply(bp: BitPerm, f: Mbf) -> Mbf:
    """The function g with g(bp(i)) = f(i) for every subset index i."""
    if bp.n != f.n:
        raise InputError(f"variable counts differ: {bp.n} vs {f.n}")
    size = 1 << f.n
    out = 0
    for i in range(size):
        if bit_at(f.value, i, f.n):
            out |= 1 << (size - 1 - bp.mapping[i])
    return Mbf(f.n, out, _checked=True)


def orbits(bp: BitPerm):
    """Orbits of the subset indices, each sorted, ordered by minimum."""
    return [tuple(sorted(cycle)) for cycle in bp.cycles()]


def is_fixed(f: Mbf, bp: BitPerm) -> bool:
    """True iff f is constant on every orbit of ``bp``."""
    if bp.n != f.n:
        raise InputError(f"variable counts differ: {bp.n} vs {f.n}")
    for i, image in enumerate(bp.mapping):
        if bit_at(f.value, i, f.n) != bit_at(f.value, image, f.n):
            return False
    return True


@lru_cache(maxsize=None)
def _lift_cached(mapping: tuple) -> BitPerm:
    return lift(VarPerm(mapping))


def lift_type(t: CycleType) -> BitPerm:
    """Lift of the canonical representative of ``t``."""
    return _lift_cached(canonical_perm(t).mapping)
