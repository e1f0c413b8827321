"""Exception types shared across the toolkit.

The CLI maps these onto exit codes, so library code should raise the most
specific one that applies rather than a bare ValueError.
"""


class DomainError(ValueError):
    """Input violates a documented precondition (bad vertex id, wrong shape, ...)."""


class GraphParseError(DomainError):
    """Edge-list text is malformed; the message names the offending line."""


class CapacityError(RuntimeError):
    """Instance exceeds a hard size cap of an exhaustive routine."""
