"""Exception hierarchy shared by every shakekit module."""

from __future__ import annotations


class ShakeKitError(ValueError):
    """Base class. Carries an optional 1-based ``line`` or 0-based ``index``."""

    def __init__(self, message: str, *, line: int | None = None, index: int | None = None):
        self.message = message
        self.line = line
        self.index = index
        where = ""
        if line is not None:
            where = f"line {line}: "
        elif index is not None:
            where = f"sample {index}: "
        super().__init__(where + message)


class InvalidSampleError(ShakeKitError):
    """A sample has a non-finite field."""


class OrderingError(ShakeKitError):
    """Timestamps are not strictly increasing."""


class FormatError(ShakeKitError):
    """A document has the wrong overall shape (e.g. a bad CSV header)."""


class ParseError(ShakeKitError):
    """A single record could not be parsed."""


class ConfigError(ShakeKitError):
    """Invalid detector configuration or sweep grid."""


class SpecError(ShakeKitError):
    """Invalid synthetic trace specification."""
