"""Exception hierarchy shared by all modules."""


class ChordpowError(Exception):
    """Base class for every error raised by this package."""


class ArgumentError(ChordpowError, ValueError):
    """Bad argument: out-of-range vertex, dimension mismatch, invalid family parameters."""


class DomainError(ChordpowError, ValueError):
    """Input outside the mathematical domain of an operation (e.g. non-chordal graph)."""


class CapacityError(ChordpowError):
    """An exponential-time search was asked to run past its vertex cap."""


class ParseError(ChordpowError, ValueError):
    """Malformed text input. ``line`` is 1-based, or None when not line specific."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(ChordpowError, ValueError):
    """Well-formed input that violates a structural rule (duplicate edge, asymmetric matrix)."""
