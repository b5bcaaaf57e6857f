"""Exception types and the global pattern-size limit."""

import os

DEFAULT_PATTERN_LIMIT = 12
LIMIT_ENV_VAR = "HOMLATTICE_LIMIT"


class HomlatticeError(Exception):
    """Base class for errors raised by this package."""


class PatternSizeError(HomlatticeError):
    """A pattern exceeds the size limit for exhaustive enumeration."""


class BudgetError(HomlatticeError):
    """A brute-force enumeration would exceed its operation budget."""


class PartitionError(HomlatticeError):
    """A vertex partition is malformed or does not match the graph."""


class ParseError(HomlatticeError):
    """An input file (graph, matrix, or manifest) is malformed."""


class HostError(HomlatticeError):
    """A host graph violates a precondition, e.g. it carries selfloops."""


class TreeError(HomlatticeError):
    """A graph required to be a tree is not one."""


def resolve_limit(limit=None):
    """Return the effective pattern-size limit.

    Explicit argument wins, then the environment variable, then the default.
    """
    if limit is not None:
        return int(limit)
    env = os.environ.get(LIMIT_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise HomlatticeError(
                f"{LIMIT_ENV_VAR} must be an integer, got {env!r}") from None
    return DEFAULT_PATTERN_LIMIT


def ensure_pattern_size(n, limit=None):
    """Raise PatternSizeError when n vertices exceed the effective limit."""
    eff = resolve_limit(limit)
    if n > eff:
        raise PatternSizeError(
            f"pattern on {n} vertices exceeds the enumeration limit {eff}")
    return eff
