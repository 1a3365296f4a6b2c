"""Exception hierarchy shared by every module."""


class PermstatError(Exception):
    """Base class for all errors raised by permstat."""


class InvalidInput(PermstatError, ValueError):
    """An object or argument violates its documented invariants."""


class ParseError(InvalidInput):
    """Text could not be decoded into an object.

    ``position`` is the 1-based index of the offending token (or character,
    for compact digit strings), or ``None`` when the whole text is at fault.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class InvariantViolation(PermstatError, RuntimeError):
    """An internal invariant of a bijection failed on validated input."""


class ResourceLimit(PermstatError):
    """A requested enumeration exceeds the configured size guard."""
