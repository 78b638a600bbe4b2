"""Exception types shared across the toolkit."""


class NvepError(Exception):
    """Base class for all toolkit errors."""


class MalformedSequenceError(NvepError):
    """A sequence is not a permutation of the instance's vehicle indices."""


class MalformedInputError(NvepError):
    """An operation received structurally invalid data (lengths, signs, types)."""


class CapacityError(NvepError):
    """A solver refused an input above its configured size cap."""


class WrongSolverError(NvepError):
    """The chosen solver cannot handle this kind of instance."""


class ParseError(NvepError):
    """A text input failed to parse. Carries source and line context."""

    def __init__(self, message, source=None, line=None):
        super().__init__(message)
        self.source = source
        self.line = line

    def __str__(self):
        message = super().__str__()
        if self.source is not None and self.line is not None:
            return f"{self.source}:{self.line}: {message}"
        if self.source is not None:
            return f"{self.source}: {message}"
        if self.line is not None:
            return f"line {self.line}: {message}"
        return message


class DisagreementError(NvepError):
    """Two decision routes that must agree returned different answers.

    ``report`` is an ordered mapping of key -> printable value, rendered by
    the CLI as line-oriented ``key: value`` text.
    """

    def __init__(self, message, report):
        super().__init__(message)
        self.report = dict(report)
