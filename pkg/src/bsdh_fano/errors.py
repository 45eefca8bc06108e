"""Exception hierarchy shared by every module."""


class BsdhError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(BsdhError, ValueError):
    """Malformed or out-of-range input (type names, letters, rows, text)."""


class MatrixValidationError(InvalidInputError):
    """A raw matrix violates the strictly-upper-triangular entry rules."""

    def __init__(self, message, row=None, col=None):
        super().__init__(message)
        self.row = row
        self.col = col


class NotReducedError(InvalidInputError):
    """Classification was requested for a word that is not reduced."""

    def __init__(self, word, length):
        self.word = word
        self.length = length
        super().__init__(
            f"word is not reduced (length {length} ≠ {len(word)})"
        )


class CapacityError(BsdhError):
    """An enumeration would exceed its configured size bound."""
