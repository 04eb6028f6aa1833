"""Low-level helpers for truth tables stored as Python integers.

A function of n variables occupies 2**n bits.  The truth-table string is
read left to right with subset index 0 first, and that string *is* the
big-endian binary rendering of the integer.  Subset index i therefore
lives at bit position (2**n - 1) - i, which equals the bitwise complement
of i within n bits.
"""

from __future__ import annotations

import numpy as np

# bit-reversal of a single byte, used to reverse whole truth tables
_REV8 = bytes(int(f"{b:08b}"[::-1], 2) for b in range(256))


def table_size(n: int) -> int:
    return 1 << n


def full_mask(n: int) -> int:
    return (1 << (1 << n)) - 1


def bit_at(value: int, index: int, n: int) -> int:
    """Truth-table entry at subset index ``index``."""
    return (value >> ((1 << n) - 1 - index)) & 1


def bits_to_int(bits) -> int:
    """Pack a truth-table sequence (index 0 first) into its integer rendering."""
    value = 0
    for b in bits:
        value = (value << 1) | (1 if b else 0)
    return value


def int_to_bits(value: int, n: int) -> list:
    """Unpack an integer rendering into the truth-table list (index 0 first)."""
    size = 1 << n
    return [(value >> (size - 1 - i)) & 1 for i in range(size)]


def reverse_bits(value: int, nbits: int) -> int:
    """Reverse an nbits-wide bit string.  nbits must be a power of two."""
    if nbits >= 8:
        raw = value.to_bytes(nbits // 8, "little")
        return int.from_bytes(raw.translate(_REV8), "big")
    out = 0
    for _ in range(nbits):
        out = (out << 1) | (value & 1)
        value >>= 1
    return out


def dual_int(value: int, n: int) -> int:
    """Reverse the truth table and complement it (de Morgan dual)."""
    size = 1 << n
    return reverse_bits(value ^ full_mask(n), size)


def monotone_masks(n: int) -> list:
    """For each variable weight p, the mask of bit positions q with p set in q."""
    size = 1 << n
    masks = []
    p = 1
    while p < size:
        block = ((1 << p) - 1) << p
        mask = 0
        step = 2 * p
        for start in range(0, size, step):
            mask |= block << start
        masks.append((p, mask))
        p <<= 1
    return masks


# ---------------------------------------------------------------------------
# numpy variants for packed uint64 truth tables (n <= 6)

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)


def reverse_bits64(arr: np.ndarray, nbits: int) -> np.ndarray:
    """Bitwise reversal of the low ``nbits`` of each uint64 entry."""
    v = arr.astype(np.uint64, copy=True)
    v = ((v >> np.uint64(1)) & _M1) | ((v & _M1) << np.uint64(1))
    v = ((v >> np.uint64(2)) & _M2) | ((v & _M2) << np.uint64(2))
    v = ((v >> np.uint64(4)) & _M4) | ((v & _M4) << np.uint64(4))
    v = v.byteswap()
    if nbits < 64:
        v >>= np.uint64(64 - nbits)
    return v


def dual64(arr: np.ndarray, n: int) -> np.ndarray:
    size = 1 << n
    mask = np.uint64(full_mask(n))
    return reverse_bits64(arr ^ mask, size)


def apply_position_map(arr: np.ndarray, pos_map, n: int) -> np.ndarray:
    """Permute the bit positions of every entry according to ``pos_map``.

    pos_map[q] is the destination position of source position q; positions
    fixed by the map are copied in one strike.
    """
    size = 1 << n
    fixed = 0
    moved = []
    for q in range(size):
        if pos_map[q] == q:
            fixed |= 1 << q
        else:
            moved.append(q)
    out = arr & np.uint64(fixed)
    one = np.uint64(1)
    for q in moved:
        out |= ((arr >> np.uint64(q)) & one) << np.uint64(pos_map[q])
    return out
