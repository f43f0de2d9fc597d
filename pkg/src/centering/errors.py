"""Exception types shared across the package."""

from __future__ import annotations


class CenteringError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(CenteringError):
    """Malformed discourse, lexicon, or language-config file."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class ResolutionError(CenteringError):
    """The engine could not produce an admissible interpretation.

    When raised because every candidate was filtered out, `rejected` carries
    the (Interpretation, RejectReason) pairs that were considered.
    """

    def __init__(self, message: str, rejected=()):
        super().__init__(message)
        self.rejected = tuple(rejected)
