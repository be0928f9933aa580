"""Exception hierarchy shared by every package.

The CLI maps these onto exit codes, so library code raises the narrowest
class that fits instead of a bare RuntimeError.
"""

from __future__ import annotations

from typing import Optional


class QMarginalError(Exception):
    """Base class for errors raised by this project."""


class NetlistError(QMarginalError, ValueError):
    """A netlist text could not be parsed or failed validation."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.message = message
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class CircuitFormatError(QMarginalError, ValueError):
    """A serialized circuit text is malformed."""


class ResourceLimitError(QMarginalError, RuntimeError):
    """A configured cap (enumeration size, qubit count) would be exceeded."""

    def __init__(self, what: str, requested: int, limit: int):
        self.what = what
        self.requested = requested
        self.limit = limit
        super().__init__(f"{what} {requested} exceeds the configured limit of {limit}")
