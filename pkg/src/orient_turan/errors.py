"""Exception types shared across the package."""


class OrientTuranError(Exception):
    """Base class for every error raised by this package."""


class CapacityError(OrientTuranError, ValueError):
    """A requested size exceeds a hard capacity (n > 62, pattern order > 10)."""


class InvalidInputError(OrientTuranError, ValueError):
    """Arguments violate an operation's contract (loop, 2-cycle, bad sizes...)."""


class BudgetError(OrientTuranError, RuntimeError):
    """A search or enumeration would exceed, or has exhausted, its budget."""


class ParseError(OrientTuranError, ValueError):
    """Malformed input text.  ``offset`` is the byte position when known."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message)
        self.offset = offset


class ConsistencyError(OrientTuranError, RuntimeError):
    """An internal cross-check failed; this signals a bug, not bad input."""
