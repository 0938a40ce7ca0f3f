"""Exception hierarchy shared by every vknot module."""


class VKnotError(Exception):
    """Base class for all library errors."""


class GaussSyntaxError(VKnotError, SyntaxError, ValueError):
    """A Gauss code contains a malformed token or separator.

    It is a :class:`SyntaxError` for callers that match on the builtin and a
    :class:`ValueError` like every other input error here.
    """

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class ValidationError(VKnotError, ValueError):
    """A Gauss code is well formed but does not describe a Gauss diagram.

    ``reason`` is one of ``"count"`` (a label does not occur exactly twice),
    ``"passage"`` (both occurrences have the same passage) or ``"sign"``
    (the two occurrences disagree on the sign).
    """

    def __init__(self, message, reason, label=None):
        super().__init__(message)
        self.reason = reason
        self.label = label


class NotAKnot(VKnotError, ValueError):
    """The operation needs a single-circle diagram."""


class PreconditionViolated(VKnotError, ValueError):
    """A move was applied at a site where its conditions do not hold."""


class BudgetExceeded(VKnotError, RuntimeError):
    """A computation would exceed its configured size cap."""
