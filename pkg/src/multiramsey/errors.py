"""Exception types shared across the package."""


class MultiramseyError(Exception):
    """Base class for all errors raised on bad inputs."""


class DomainError(MultiramseyError, ValueError):
    """Arguments violate a documented precondition (e.g. j < m)."""


class OrderTooLarge(DomainError):
    """Pattern order exceeds the exact chromatic-number domain (16 vertices)."""


class PatternTooLarge(DomainError):
    """Pattern order exceeds the generic subgraph-search domain (10 vertices)."""


class ColoringFormatError(MultiramseyError, ValueError):
    """A coloring file failed to parse; carries the offending line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")


class InternalInconsistency(RuntimeError):
    """Two independently applicable exact cases disagreed.

    This is a bug in the dispatcher (or a transcription error in one of the
    closed forms), never a user error, so it deliberately does not inherit
    from MultiramseyError and is not converted to a CLI exit code.
    """
