"""Exception types raised across the package."""


class ChernworkError(Exception):
    """Base class for domain errors."""


class LimitExceededError(ChernworkError, ValueError):
    """A configured size guard (set partitions, dimension) was exceeded."""


class TruncationError(ChernworkError, ValueError):
    """A coefficient was requested beyond the valid order of a series."""


class NotInvertibleError(ChernworkError, ZeroDivisionError):
    """Series inversion with a non-invertible constant term."""


class NonNilpotentError(ChernworkError, ValueError):
    """Composition argument has a nonzero constant term."""


class NonMonicError(ChernworkError, ValueError):
    """A series that must start with 1 does not."""


class NotSymmetricError(ChernworkError, ValueError):
    pass


class NotRealizableError(ChernworkError, ValueError):
    """Input Chern numbers fail the integrality conditions."""
