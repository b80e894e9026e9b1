"""Exception hierarchy shared across modules."""


class TfpmisError(Exception):
    """Base class for all library errors."""


class NotTriangleFree(TfpmisError, ValueError):
    """Input graph contains a triangle."""


class BudgetExceeded(TfpmisError):
    """A configured computational budget ran out before an answer was found."""


class InvariantViolation(TfpmisError, AssertionError):
    """An internal certificate failed; signals a bug, never bad input."""
