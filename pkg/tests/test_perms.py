import itertools
import math

import pytest

from mbfcount.errors import InputError
from mbfcount.mbf import Mbf, enumerate_dn, is_monotone
from mbfcount.oracle import oracle_phi
from mbfcount.perms import (
    BitPerm,
    CycleType,
    VarPerm,
    apply,
    canonical_perm,
    is_fixed,
    lift,
    mu,
    orbits,
    partitions,
)

PARTITION_COUNTS = {1: 1, 2: 2, 3: 3, 4: 5, 5: 7, 6: 11, 7: 15, 8: 22}


def test_partition_counts():
    for n, expected in PARTITION_COUNTS.items():
        assert len(partitions(n)) == expected


def test_partitions_canonical_order():
    assert [t.lengths for t in partitions(3)] == [(3,), (2, 1), (1, 1, 1)]


def test_partitions_out_of_range():
    with pytest.raises(InputError):
        partitions(9)


def test_cycle_type_normalization_and_written_total():
    t = CycleType(7, (1, 3, 1, 2, 1))
    assert t.lengths == (3, 2, 1, 1, 1)
    assert t.written_total == 5
    assert t.nontrivial == (2, 3)
    assert CycleType.of(6, []).written_total == 0
    with pytest.raises(InputError):
        CycleType(7, (3, 2))


def test_cycle_type_parse_and_strings():
    t = CycleType.parse("2+5", 8)
    assert t.nontrivial == (2, 5)
    assert t.type_string() == "2+5"
    assert t.cycle_notation() == "(12)(34567)"
    assert CycleType.parse("1", 3).is_identity()
    with pytest.raises(InputError):
        CycleType.parse("x", 4)
    with pytest.raises(InputError):
        CycleType.parse("5+4", 8)


def test_mu_examples():
    assert mu(CycleType.of(7, [3])) == 70
    assert mu(CycleType.of(8, [2, 2, 2, 2])) == 105
    for n in (3, 5):
        assert mu(CycleType.of(n, [])) == 1


def test_mu_sums_to_factorial():
    for n in (7, 8):
        assert sum(mu(t) for t in partitions(n)) == math.factorial(n)


TABLE5_MU = {
    (): 1, (2,): 21, (3,): 70, (4,): 210, (5,): 504, (6,): 840, (7,): 720,
    (2, 2): 105, (2, 3): 420, (2, 4): 630, (2, 5): 504, (3, 3): 280,
    (3, 4): 420, (2, 2, 2): 105, (2, 2, 3): 210,
}

TABLE6_MU = {
    (): 1, (2,): 28, (3,): 112, (4,): 420, (5,): 1344, (6,): 3360,
    (7,): 5760, (8,): 5040, (2, 2): 210, (2, 3): 1120, (2, 4): 2520,
    (2, 5): 4032, (2, 6): 3360, (3, 3): 1120, (3, 4): 3360, (3, 5): 2688,
    (4, 4): 1260, (2, 2, 2): 420, (2, 2, 3): 1680, (2, 2, 4): 1260,
    (2, 3, 3): 1120, (2, 2, 2, 2): 105,
}


@pytest.mark.parametrize("n,table", [(7, TABLE5_MU), (8, TABLE6_MU)])
def test_mu_against_reference_tables(n, table):
    computed = {t.nontrivial: mu(t) for t in partitions(n)}
    assert computed == table


def test_canonical_perm_examples():
    p = canonical_perm(CycleType.of(3, [3]))
    assert p.mapping == (2, 3, 1)
    assert canonical_perm(CycleType.of(4, [])).mapping == (1, 2, 3, 4)
    assert canonical_perm(CycleType.of(4, [2, 2])).mapping == (2, 1, 4, 3)
    # shortest cycle first, as the tables write mixed types
    p = canonical_perm(CycleType.of(7, [2, 3]))
    assert p.mapping == (2, 1, 4, 5, 3, 6, 7)


def test_varperm_validation_and_ops():
    with pytest.raises(InputError):
        VarPerm((1, 1, 3))
    p = VarPerm((2, 3, 1))
    assert p.inverse().mapping == (3, 1, 2)
    assert p.compose(p.inverse()).mapping == (1, 2, 3)
    assert p.cycle_type().lengths == (3,)
    assert p.max_moved() == 3


def test_lift_examples():
    bp = lift(canonical_perm(CycleType.of(3, [3])))
    assert bp.cycle_string() == "(0)(1 2 4)(3 6 5)(7)"
    bp = lift(canonical_perm(CycleType.of(4, [2, 2])))
    assert bp.cycle_string() == "(0)(1 2)(3)(4 8)(5 10)(6 9)(7 11)(12)(13 14)(15)"
    assert lift(VarPerm.identity(2)).mapping == (0, 1, 2, 3)


def test_lift_is_homomorphism_at_n3():
    perms = [VarPerm(p) for p in itertools.permutations((1, 2, 3))]
    for p, q in itertools.product(perms, repeat=2):
        assert lift(p.compose(q)) == lift(p).compose(lift(q))


def test_lift_preserves_popcount_and_inclusion():
    for n in (2, 3, 4):
        for mapping in itertools.permutations(range(1, n + 1)):
            bp = lift(VarPerm(mapping))
            for i in range(1 << n):
                assert bin(bp(i)).count("1") == bin(i).count("1")
                for j in range(1 << n):
                    if i & j == i:
                        assert bp(i) & bp(j) == bp(i)


def test_apply_examples(d3):
    bp = lift(canonical_perm(CycleType.of(3, [3])))
    moved = apply(bp, Mbf(3, 15))
    assert moved.value != 15
    ident = lift(VarPerm.identity(3))
    for value in d3:
        f = Mbf(3, value)
        assert apply(ident, f) == f
        assert apply(bp, apply(bp.inverse(), f)) == f


def test_apply_preserves_monotonicity(d3):
    for mapping in itertools.permutations((1, 2, 3)):
        bp = lift(VarPerm(mapping))
        for value in d3:
            image = apply(bp, Mbf(3, value))
            assert is_monotone(image.value, 3)
            assert image.value in d3


def test_orbits_examples():
    bp = lift(canonical_perm(CycleType.of(3, [3])))
    assert orbits(bp) == [(0,), (1, 2, 4), (3, 5, 6), (7,)]
    assert orbits(lift(VarPerm.identity(2))) == [(0,), (1,), (2,), (3,)]
    minima = [o[0] for o in orbits(lift(canonical_perm(CycleType.of(4, [2, 2]))))]
    assert minima == [0, 1, 3, 4, 5, 6, 7, 12, 13, 15]


def test_is_fixed_examples(d3):
    bp = lift(canonical_perm(CycleType.of(3, [3])))
    fixed = [v for v in d3 if is_fixed(Mbf(3, v), bp)]
    assert fixed == [0, 1, 23, 127, 255]
    assert not is_fixed(Mbf(3, 15), bp)
    ident = lift(VarPerm.identity(3))
    assert all(is_fixed(Mbf(3, v), ident) for v in d3)


@pytest.mark.parametrize("n", [3, 4])
def test_fixed_count_depends_only_on_cycle_type(n):
    by_type = {}
    for mapping in itertools.permutations(range(1, n + 1)):
        p = VarPerm(mapping)
        count = oracle_phi(mapping, n)
        key = p.cycle_type().lengths
        by_type.setdefault(key, set()).add(count)
    for key, counts in by_type.items():
        assert len(counts) == 1, f"type {key} gave {counts}"


def test_bitperm_validation():
    with pytest.raises(InputError):
        BitPerm(2, (0, 1, 1, 3))
