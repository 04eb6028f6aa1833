"""Posets of subset-index orbits under a lifted permutation.

The fixed monotone functions of a lifted permutation correspond one to
one with the downsets of this poset, so enumerating or counting downsets
is the engine behind the direct fixed-point algorithm.
"""

from __future__ import annotations

import sys
from functools import cached_property

import numpy as np

from .errors import InputError, IntegrityError, ResourceError
from .perms import BitPerm, orbits as _orbits

DEFAULT_DOWNSET_BUDGET = 10**8
_PROGRESS_STATES = 10**7


class OrbitPoset:
    """Orbits of subset indices ordered by existential set inclusion.

    Orbit A is below orbit B when some member of A is a subset of some
    member of B; because orbits are translates of one another under the
    group, it is enough to test the minimum representative of A against
    the members of B.
    """

    def __init__(self, bp: BitPerm):
        self.n = bp.n
        self.bitperm = bp
        self.orbits = _orbits(bp)
        self.minima = [orbit[0] for orbit in self.orbits]
        self._verify_linext()

    def __len__(self) -> int:
        return len(self.orbits)

    @cached_property
    def leq(self) -> np.ndarray:
        """Boolean matrix: leq[i, j] iff orbit i is below orbit j."""
        m = len(self.orbits)
        rel = np.zeros((m, m), dtype=bool)
        for i, rep in enumerate(self.minima):
            for j, orbit in enumerate(self.orbits):
                rel[i, j] = any((rep & t) == rep for t in orbit)
        return rel

    def leq_matrix(self):
        return self.leq

    @cached_property
    def covers(self) -> np.ndarray:
        """Transitive reduction of the order: covers[i, j] iff j covers i."""
        lt = self.leq & ~np.eye(len(self.orbits), dtype=bool)
        return lt & ~(lt @ lt)

    def cover_pairs(self):
        """Sorted (lower, upper) index pairs of the Hasse diagram."""
        return [tuple(p) for p in np.argwhere(self.covers)]

    def _verify_linext(self) -> None:
        # minimum-representative order must be a linear extension
        if np.tril(self.leq, -1).any():
            i, j = np.argwhere(np.tril(self.leq, -1))[0]
            raise IntegrityError(
                f"orbit order broken: orbit {int(i)} below earlier orbit {int(j)}"
            )

    @cached_property
    def _pred_masks(self) -> list:
        """For each orbit, the bitmask of its cover-predecessors."""
        masks = [0] * len(self.orbits)
        for i, j in np.argwhere(self.covers):
            masks[j] |= 1 << int(i)
        return masks

    def to_dot(self) -> str:
        """Hasse diagram in DOT format, nodes labelled by orbit minimum."""
        lines = ["digraph orbit_poset {", "  rankdir=BT;"]
        for i, orbit in enumerate(self.orbits):
            label = "{" + ",".join(str(v) for v in orbit) + "}"
            lines.append(f'  n{self.minima[i]} [label="{label}"];')
        for i, j in self.cover_pairs():
            lines.append(f"  n{self.minima[i]} -> n{self.minima[j]};")
        lines.append("}")
        return "\n".join(lines)


def build_poset(bp: BitPerm) -> OrbitPoset:
    return OrbitPoset(bp)


def enumerate_downsets(poset: OrbitPoset, budget: int = DEFAULT_DOWNSET_BUDGET):
    """Every downset exactly once, as bitmasks over the orbit indices.

    Orbits are processed in minimum-representative order; a downset is
    created when its last orbit (in that order) is added, which happens
    iff all cover-predecessors of that orbit are already present.
    """
    preds = poset._pred_masks
    downsets = [0]
    for k in range(len(poset.orbits)):
        bit = 1 << k
        need = preds[k]
        additions = [d | bit for d in downsets if (d & need) == need]
        if len(downsets) + len(additions) > budget:
            raise ResourceError(
                f"more than {budget} downsets; use count_downsets or raise the budget"
            )
        downsets.extend(additions)
    return downsets


def count_downsets(
    poset: OrbitPoset,
    budget: int | None = None,
    progress=None,
) -> int:
    """Count downsets without materializing them.

    Dynamic programming over the orbit order: the running state keeps,
    per reachable membership pattern of the still-relevant orbits, how
    many downsets of the processed prefix show that pattern.  Prefix
    counts only grow, so an optional ``budget`` aborts early once the
    count provably exceeds it.
    """
    m = len(poset.orbits)
    preds = poset._pred_masks
    last_use = list(range(m))
    for i, j in np.argwhere(poset.covers):
        last_use[int(i)] = max(last_use[int(i)], int(j))

    states = {0: 1}
    reported = False
    for k in range(m):
        bit = 1 << k
        need = preds[k]
        keep = 0
        for i in range(k + 1):
            if last_use[i] > k:
                keep |= 1 << i
        nxt = {}
        for pattern, count in states.items():
            kept = pattern & keep
            nxt[kept] = nxt.get(kept, 0) + count
            if (pattern & need) == need:
                kept_in = (pattern | bit) & keep
                nxt[kept_in] = nxt.get(kept_in, 0) + count
        states = nxt
        if budget is not None and sum(states.values()) > budget:
            raise ResourceError(
                f"downset count exceeds the budget of {budget} at orbit {k + 1}/{m}"
            )
        if len(states) > _PROGRESS_STATES and not reported:
            reported = True
            msg = f"count_downsets: {len(states)} states at orbit {k + 1}/{m}"
            if progress is not None:
                progress(msg)
            else:
                print(msg, file=sys.stderr)
    return sum(states.values())


def width(poset: OrbitPoset) -> int:
    """Size of the largest antichain, by Dilworth via bipartite matching.

    A minimum chain cover of the transitive closure leaves exactly
    ``m - matching`` chains, and that number equals the width.
    """
    m = len(poset.orbits)
    strict = poset.leq & ~np.eye(m, dtype=bool)
    succ = [np.flatnonzero(strict[i]).tolist() for i in range(m)]
    match_right = [-1] * m

    def augment(u: int, seen) -> bool:
        for v in succ[u]:
            if seen[v]:
                continue
            seen[v] = True
            if match_right[v] == -1 or augment(match_right[v], seen):
                match_right[v] = u
                return True
        return False

    matched = 0
    for u in range(m):
        if augment(u, [False] * m):
            matched += 1
    return m - matched
