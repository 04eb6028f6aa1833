import numpy as np
import pytest

from mbfcount import _bits


def test_rendering_round_trip_all_vectors_n2():
    # every 4-bit table survives int -> bits -> int
    for value in range(16):
        bits = _bits.int_to_bits(value, 2)
        assert _bits.bits_to_int(bits) == value


@pytest.mark.parametrize("value,n,expected", [(15, 3, "00001111"), (23, 3, "00010111")])
def test_rendering_matches_table_strings(value, n, expected):
    assert "".join(str(b) for b in _bits.int_to_bits(value, n)) == expected


def test_bit_at_subset_indexing():
    # 23 at n=3 is true on {x1,x2}, {x1,x3}, {x2,x3}, {x1,x2,x3}
    assert [_bits.bit_at(23, i, 3) for i in range(8)] == [0, 0, 0, 1, 0, 1, 1, 1]


@pytest.mark.parametrize("nbits", [1, 2, 4, 8, 16, 64, 256])
def test_reverse_bits_involution(nbits):
    for value in (0, 1, (1 << nbits) - 1, 0b101 % (1 << nbits)):
        assert _bits.reverse_bits(_bits.reverse_bits(value, nbits), nbits) == value


def test_reverse_bits_small():
    assert _bits.reverse_bits(0b0001, 4) == 0b1000
    assert _bits.reverse_bits(0b00010111, 8) == 0b11101000


def test_dual_int_examples():
    # dual of the all-zeros function is all-ones
    assert _bits.dual_int(0, 3) == 255
    # dual of "true iff x3" (15) is "x1 or x2 ... " reversed-complement
    assert _bits.dual_int(_bits.dual_int(23, 3), 3) == 23


def test_reverse_bits64_matches_python():
    rng = np.random.default_rng(7)
    for n in (2, 3, 6):
        nbits = 1 << n
        vals = rng.integers(0, 1 << min(nbits, 63), size=50, dtype=np.uint64)
        fast = _bits.reverse_bits64(vals, nbits)
        for v, f in zip(vals, fast):
            assert int(f) == _bits.reverse_bits(int(v), nbits)


def test_dual64_matches_python():
    vals = np.arange(16, dtype=np.uint64)
    fast = _bits.dual64(vals, 2)
    for v, f in zip(vals, fast):
        assert int(f) == _bits.dual_int(int(v), 2)


def test_apply_position_map_identity_and_swap():
    vals = np.arange(16, dtype=np.uint64)
    same = _bits.apply_position_map(vals, list(range(16)), 4)
    assert np.array_equal(same, vals)
    swapped = _bits.apply_position_map(np.array([0b01], dtype=np.uint64), [1, 0], 1)
    assert int(swapped[0]) == 0b10
