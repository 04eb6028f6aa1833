"""Exception types shared across the package.

The CLI maps these onto stable exit codes: InputError -> 2,
ConfigError -> 3, ResourceError -> 4, IntegrityError -> 1.
"""


class MbfError(Exception):
    pass


class InputError(MbfError):
    """Malformed or out-of-domain argument."""


class ResourceError(MbfError):
    """A budget (memory, materialization, pair comparisons) would be exceeded."""


class ConfigError(MbfError):
    """Missing or contradictory configuration, e.g. an absent known constant."""


class IntegrityError(MbfError):
    """An internal cross-check failed; indicates a bug, not bad input."""
