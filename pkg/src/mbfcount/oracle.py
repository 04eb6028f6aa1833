"""Naive reference implementations for small n.

Everything here scans full spaces and recomputes from first principles;
the only helpers shared with the fast paths are is_monotone and leq.
The point is independence: these functions anchor the test suite.
"""

from __future__ import annotations

from itertools import permutations as _all_perms

from .errors import InputError
from .mbf import MbfSet, enumerate_dn, is_monotone

ORACLE_FULL_SCAN_MAX = 4
ORACLE_FILTER_MAX = 5


def oracle_enum_dn(n: int) -> MbfSet:
    """All monotone functions of n variables by filtering every bit vector."""
    if n > ORACLE_FULL_SCAN_MAX:
        raise InputError(f"full-space scan limited to n <= {ORACLE_FULL_SCAN_MAX}")
    found = []
    for candidate in range(1 << (1 << n)):
        if is_monotone(candidate, n):
            found.append(candidate)
    return MbfSet(n, found)


def _subset_image(i: int, mapping, n: int) -> int:
    image = 0
    for j in range(1, n + 1):
        if i & (1 << (j - 1)):
            image |= 1 << (mapping[j - 1] - 1)
    return image


def _is_fixed_under(value: int, mapping, n: int) -> bool:
    size = 1 << n
    for i in range(size):
        j = _subset_image(i, mapping, n)
        if ((value >> (size - 1 - i)) & 1) != ((value >> (size - 1 - j)) & 1):
            return False
    return True


def oracle_phi(mapping, n: int) -> int:
    """Count monotone functions unchanged by the variable permutation.

    ``mapping`` is the sequence pi(1)..pi(n).
    """
    if n > ORACLE_FILTER_MAX:
        raise InputError(f"filter scan limited to n <= {ORACLE_FILTER_MAX}")
    mapping = tuple(int(v) for v in mapping)
    if sorted(mapping) != list(range(1, n + 1)):
        raise InputError(f"not a permutation of 1..{n}: {mapping}")
    count = 0
    for value in enumerate_dn(n):
        if _is_fixed_under(value, mapping, n):
            count += 1
    return count


def oracle_fixed_set(mapping, n: int) -> MbfSet:
    """The fixed functions themselves, for cross-checking generated sets."""
    mapping = tuple(int(v) for v in mapping)
    return MbfSet(
        n, [v for v in enumerate_dn(n) if _is_fixed_under(v, mapping, n)]
    )


def oracle_r(n: int) -> int:
    """Count equivalence classes of monotone functions by orbit partitioning.

    Two functions are equivalent when some permutation of the input
    variables carries one to the other; each class is represented by its
    smallest member.
    """
    if n > ORACLE_FULL_SCAN_MAX:
        raise InputError(f"orbit partitioning limited to n <= {ORACLE_FULL_SCAN_MAX}")
    size = 1 << n
    mappings = [tuple(p) for p in _all_perms(range(1, n + 1))]
    representatives = set()
    for value in enumerate_dn(n):
        smallest = value
        for mapping in mappings:
            moved = 0
            for i in range(size):
                if (value >> (size - 1 - i)) & 1:
                    moved |= 1 << (size - 1 - _subset_image(i, mapping, n))
            if moved < smallest:
                smallest = moved
        representatives.add(smallest)
    return len(representatives)


def oracle_downsets(poset) -> int:
    """Count downsets of an OrbitPoset by filtering all index subsets."""
    m = len(poset.orbits)
    if m > 20:
        raise InputError(f"subset filtering limited to 20 orbits, got {m}")
    below = poset.leq_matrix()
    count = 0
    for mask in range(1 << m):
        ok = True
        for j in range(m):
            if not (mask >> j) & 1:
                continue
            for i in range(m):
                if below[i][j] and not (mask >> i) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count
