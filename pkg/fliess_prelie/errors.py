"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations

from typing import Optional


class FliessPrelieError(Exception):
    """Base class for every error raised by fliess_prelie."""


class DomainError(FliessPrelieError, ValueError):
    """An argument is outside the domain of the operation."""


class StructureError(FliessPrelieError, ValueError):
    """A tree or partition is structurally invalid."""


class TruncationError(FliessPrelieError):
    """A coefficient was requested beyond the stored truncation order."""


class ConsistencyError(FliessPrelieError):
    """An internal identity that must hold did not."""


class ParseError(FliessPrelieError, ValueError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None and column is not None:
            where = f" (line {line}, column {column})"
        super().__init__(f"{message}{where}")
