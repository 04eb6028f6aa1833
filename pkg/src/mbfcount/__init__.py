"""Counting monotone Boolean functions and their equivalence classes."""

from .burnside import (
    BurnsideReport,
    BurnsideRow,
    KnownConstants,
    compute_r,
    dedekind_number,
    verify_report,
)
from .errors import ConfigError, InputError, IntegrityError, MbfError, ResourceError
from .fixpoints import (
    Budgets,
    FixSet,
    PhiResult,
    alg1_fixset,
    alg2_count_pairs,
    alg2_extend,
    alg3_count,
    phi,
    quadrant_count_two_fixed,
)
from .intervals import IntervalCounter
from .mbf import Mbf, MbfSet, concat, enumerate_dn, is_monotone, leq, split
from .perms import (
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
from .posets import OrbitPoset, build_poset, count_downsets, enumerate_downsets, width

__version__ = "0.1.0"

__all__ = [
    "Budgets",
    "BurnsideReport",
    "BurnsideRow",
    "BitPerm",
    "ConfigError",
    "CycleType",
    "FixSet",
    "InputError",
    "IntegrityError",
    "IntervalCounter",
    "KnownConstants",
    "Mbf",
    "MbfError",
    "MbfSet",
    "OrbitPoset",
    "PhiResult",
    "ResourceError",
    "VarPerm",
    "alg1_fixset",
    "alg2_count_pairs",
    "alg2_extend",
    "alg3_count",
    "apply",
    "build_poset",
    "canonical_perm",
    "compute_r",
    "concat",
    "count_downsets",
    "dedekind_number",
    "enumerate_dn",
    "enumerate_downsets",
    "is_fixed",
    "is_monotone",
    "leq",
    "lift",
    "mu",
    "orbits",
    "partitions",
    "phi",
    "quadrant_count_two_fixed",
    "split",
    "verify_report",
    "width",
]
