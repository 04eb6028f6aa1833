import itertools

import pytest

from mbfcount.errors import ResourceError
from mbfcount.mbf import dn_count
from mbfcount.oracle import oracle_downsets
from mbfcount.perms import CycleType, VarPerm, canonical_perm, lift
from mbfcount.posets import build_poset, count_downsets, enumerate_downsets, width


def poset_of(n, lengths):
    return build_poset(lift(canonical_perm(CycleType.of(n, lengths))))


def test_figure_one_poset():
    poset = poset_of(4, [2, 2])
    assert [o[0] for o in poset.orbits] == [0, 1, 3, 4, 5, 6, 7, 12, 13, 15]
    named = {(poset.minima[i], poset.minima[j]) for i, j in poset.cover_pairs()}
    assert named == {
        (0, 1), (0, 4),
        (1, 3), (1, 5), (1, 6),
        (4, 5), (4, 6), (4, 12),
        (3, 7), (5, 7), (6, 7),
        (5, 13), (6, 13), (12, 13),
        (7, 15), (13, 15),
    }


def test_three_cycle_poset_is_chain():
    poset = poset_of(3, [3])
    assert poset.orbits == [(0,), (1, 2, 4), (3, 5, 6), (7,)]
    assert poset.cover_pairs() == [(0, 1), (1, 2), (2, 3)]
    assert len(enumerate_downsets(poset)) == 5


def test_identity_poset_is_boolean_lattice():
    poset = poset_of(2, [])
    assert len(poset) == 4
    assert count_downsets(poset) == 6
    # B^0: one orbit, two downsets
    tiny = poset_of(0, [])
    assert len(enumerate_downsets(tiny)) == 2


def test_twenty_eight_downsets():
    poset = poset_of(4, [2, 2])
    downs = enumerate_downsets(poset)
    assert len(downs) == 28
    assert len(set(downs)) == 28
    assert count_downsets(poset) == 28
    assert oracle_downsets(poset) == 28


def test_downsets_are_downward_closed():
    for n, lengths in [(3, [3]), (4, [2, 2]), (4, [4]), (3, []), (4, [3])]:
        poset = poset_of(n, lengths)
        rel = poset.leq
        for mask in enumerate_downsets(poset):
            for j in range(len(poset)):
                if not (mask >> j) & 1:
                    continue
                for i in range(len(poset)):
                    if rel[i][j]:
                        assert (mask >> i) & 1, (lengths, mask, i, j)


def all_length_n_types(n):
    out = []
    for t in (CycleType.of(n, parts) for parts in _partitions_without_ones(n)):
        out.append(t)
    return out


def _partitions_without_ones(n):
    if n == 0:
        yield ()
        return
    def descend(remaining, largest, prefix):
        if remaining == 0:
            yield tuple(prefix)
            return
        for part in range(min(remaining, largest), 1, -1):
            yield from descend(remaining - part, part, prefix + [part])
    yield from descend(n, n, [])


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_enumerate_matches_count_for_full_length_types(n):
    for t in all_length_n_types(n):
        poset = poset_of(n, t.nontrivial)
        downs = enumerate_downsets(poset)
        assert len(downs) == len(set(downs))
        assert len(downs) == count_downsets(poset)
        if len(poset) <= 20:
            assert len(downs) == oracle_downsets(poset)


def test_count_downsets_known_large_posets():
    assert count_downsets(poset_of(8, [8])) == 2364
    assert count_downsets(poset_of(8, [2, 6])) == 70096


def test_identity_count_matches_dedekind():
    for n in range(5):
        assert count_downsets(poset_of(n, [])) == dn_count(n)


def test_width_examples():
    assert width(poset_of(3, [3])) == 1
    assert width(poset_of(4, [2, 2])) == 4  # brute-force value over all orbit subsets
    big = poset_of(8, [2, 2, 2, 2])
    w = width(big)
    assert w == 38
    assert (1 << w) == 274877906944


def test_width_brute_force_cross_check():
    poset = poset_of(4, [2, 2])
    rel = poset.leq
    m = len(poset)
    best = 0
    for size in range(1, m + 1):
        for combo in itertools.combinations(range(m), size):
            if all(
                not rel[i][j] and not rel[j][i]
                for i, j in itertools.combinations(combo, 2)
            ):
                best = max(best, size)
    assert width(poset) == best


def test_downset_count_bounds():
    for n, lengths in [(4, [2, 2]), (5, [2, 3]), (6, [2, 2, 2])]:
        poset = poset_of(n, lengths)
        count = count_downsets(poset)
        assert (1 << width(poset)) <= count <= (1 << len(poset))


def test_enumerate_budget_error():
    poset = poset_of(4, [])
    with pytest.raises(ResourceError, match="count_downsets"):
        enumerate_downsets(poset, budget=10)


def test_count_budget_error():
    poset = poset_of(6, [])
    with pytest.raises(ResourceError):
        count_downsets(poset, budget=1000)


def test_dot_export():
    poset = poset_of(3, [3])
    dot = poset.to_dot()
    assert dot.startswith("digraph")
    assert "n0 -> n1" in dot
    assert dot.count("->") == 3


def test_nonlifted_linext_still_verified():
    # a hand-made bit permutation that is not a lift: orbit {0, 3} on B^2
    from mbfcount.perms import BitPerm
    from mbfcount.errors import IntegrityError

    twisted = BitPerm(2, (3, 1, 2, 0))
    with pytest.raises(IntegrityError):
        build_poset(twisted)
