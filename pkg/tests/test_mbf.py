import itertools

import pytest

from mbfcount.errors import InputError, ResourceError
from mbfcount.mbf import (
    Mbf,
    MbfSet,
    concat,
    dn_count,
    enumerate_dn,
    is_monotone,
    leq,
    split,
)

TABLE_DN = [2, 3, 6, 20, 168, 7581, 7828354]


def test_is_monotone_examples():
    assert is_monotone(15, 3)
    assert not is_monotone(4, 2)
    assert is_monotone(0, 0)
    assert is_monotone(1, 0)


def test_is_monotone_accepts_bit_vectors():
    assert is_monotone([0, 0, 0, 0, 1, 1, 1, 1], 3)
    with pytest.raises(InputError):
        is_monotone([0, 1], 2)


def test_is_monotone_rejects_oversized_value():
    with pytest.raises(InputError):
        is_monotone(1 << 8, 2)


def test_mbf_constructor_validates():
    with pytest.raises(InputError):
        Mbf(2, 4)
    f = Mbf(3, 23)
    assert f.bitstring() == "00010111"
    assert f.bits() == [0, 0, 0, 1, 0, 1, 1, 1]
    assert f.bit(3) == 1 and f.bit(4) == 0


def test_leq_examples():
    assert leq(Mbf(3, 1), Mbf(3, 23))
    assert not leq(Mbf(2, 5), Mbf(2, 3))
    f = Mbf(2, 7)
    assert leq(f, f)
    with pytest.raises(InputError):
        leq(Mbf(2, 3), Mbf(3, 3))


def test_concat_examples():
    assert concat(Mbf(2, 0), Mbf(2, 15)).value == 15
    assert concat(Mbf(0, 0), Mbf(0, 0)).value == 0
    joined = concat(Mbf(2, 1), Mbf(2, 1))
    assert joined.value == 17 and is_monotone(joined.value, 3)
    with pytest.raises(InputError):
        concat(Mbf(2, 15), Mbf(2, 0))


def test_split_examples():
    assert tuple(int(h) for h in split(Mbf(3, 15))) == (0, 15)
    assert tuple(int(h) for h in split(Mbf(3, 23))) == (1, 7)
    assert tuple(int(h) for h in split(Mbf(3, 255))) == (15, 15)
    with pytest.raises(InputError):
        split(Mbf(0, 1))


def test_concat_split_round_trip_over_d2():
    d2 = [Mbf(2, v) for v in enumerate_dn(2)]
    for a, b in itertools.product(d2, repeat=2):
        if leq(a, b):
            f = concat(a, b)
            lo, hi = split(f)
            assert (lo, hi) == (a, b)


def test_enumerate_dn_counts_and_d2_list():
    assert list(enumerate_dn(2)) == [0, 1, 3, 5, 7, 15]
    assert list(enumerate_dn(1)) == [0, 1, 3]
    for n, expected in enumerate(TABLE_DN):
        assert dn_count(n) == expected


def test_enumerate_dn_cap():
    with pytest.raises(ResourceError, match="allow_large"):
        enumerate_dn(7)


def test_doubling_consistency():
    # the next count equals the number of ordered pairs a <= b
    for n in range(4):
        values = list(enumerate_dn(n))
        pairs = sum(1 for a in values for b in values if (a | b) == b)
        assert pairs == dn_count(n + 1)


def test_leq_is_partial_order_on_d3(d3):
    funcs = [Mbf(3, v) for v in d3]
    for a in funcs:
        assert leq(a, a)
    for a, b in itertools.product(funcs, repeat=2):
        if leq(a, b) and leq(b, a):
            assert a == b
    for a, b, c in itertools.product(funcs, repeat=3):
        if leq(a, b) and leq(b, c):
            assert leq(a, c)


def test_all_enumerated_are_monotone():
    for n in range(4):
        for value in enumerate_dn(n):
            assert is_monotone(value, n)


def test_dual_is_involution_on_d3(d3):
    for value in d3:
        f = Mbf(3, value)
        assert f.dual().dual() == f


def test_mbfset_membership_and_order():
    s = MbfSet(2, [15, 0, 3])
    assert list(s) == [0, 3, 15]
    assert 3 in s and 5 not in s
    assert s[1] == 3
    assert s.as_mbf(2) == Mbf(2, 15)


def test_mbf_is_immutable():
    f = Mbf(2, 3)
    with pytest.raises(AttributeError):
        f.value = 5
