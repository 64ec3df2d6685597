"""Exception hierarchy shared by every module."""


class SizeRamseyError(Exception):
    """Base class for errors raised by this package."""


class GraphError(SizeRamseyError, ValueError):
    """Invalid graph construction (loop, index out of range, order cap)."""


class Graph6Error(GraphError):
    """Malformed graph6 text."""


class PatternSyntaxError(SizeRamseyError, ValueError):
    pass


class PreconditionError(SizeRamseyError, ValueError):
    """An operation was called outside the hypothesis it is valid under."""


class BudgetExceeded(SizeRamseyError):
    """A search was refused because it would exceed its configured budget."""

    def __init__(self, message, *, limit=None, requested=None):
        super().__init__(message)
        self.limit = limit
        self.requested = requested
