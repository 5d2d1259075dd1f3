"""Exception types raised across the package."""


class RennerOrderError(Exception):
    """Base class for all errors raised by renner_order."""


class CoxeterMatrixError(RennerOrderError, ValueError):
    """The supplied Coxeter matrix is malformed."""


class NotFiniteError(RennerOrderError):
    """A breadth-first search was still growing when it reached its cap."""

    def __init__(self, cap, what="W_J"):
        self.cap = cap
        super().__init__(f"{what} is not finite at cap {cap}")


class CapExceededError(RennerOrderError):
    """A derived enumeration bound is larger than the caller's cap."""


class PreconditionFailed(RennerOrderError, ValueError):
    """An operation was called outside its documented domain."""


class ComponentViolation(RennerOrderError, ValueError):
    """C is not a component of N: some s in N\\C does not commute with some s' in C."""


class SubsetViolation(RennerOrderError, ValueError):
    """C is not a subset of N, or an index is outside the generator range."""


class ContextMismatch(RennerOrderError, ValueError):
    """Orbit elements from different contexts were combined."""


class NotComparable(RennerOrderError, ValueError):
    """An interval was requested for a pair that is not comparable."""


class ParseError(RennerOrderError, ValueError):
    """A literal or input file could not be parsed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvariantViolation(RennerOrderError, AssertionError):
    """A computed object contradicts a structural theorem; should never happen."""
