"""Exception hierarchy. Each class maps onto one CLI exit code."""


class ContextualityError(Exception):
    exit_code = 1


class ParseError(ContextualityError):
    """Malformed ray or state file."""

    exit_code = 2


class InvalidObjectError(ContextualityError, ValueError):
    """A mathematical object fails validation (normalization, hermiticity, PSD, ...)."""

    exit_code = 3

    def __init__(self, message, label=None):
        super().__init__(message)
        self.label = label


class DimensionMismatchError(ContextualityError, ValueError):
    exit_code = 4


class LimitExceededError(ContextualityError):
    """Exact search refused because the input is over the hard size limit."""

    exit_code = 5
