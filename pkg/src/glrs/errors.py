"""Exception types shared across the package."""

from __future__ import annotations


class GlrsError(Exception):
    """Base class for all package errors."""


class DomainError(GlrsError, ValueError):
    """An operation was applied outside its domain (unknown generator, division by zero, ...)."""


class EvaluationError(GlrsError, ArithmeticError):
    """Numeric evaluation of a Scalar is impossible at the requested point."""


class ParseError(GlrsError, ValueError):
    """Malformed expression or spec file. Carries a 1-based location when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None,
                 where: str | None = None):
        self.message = message
        self.line = line
        self.column = column
        self.where = where
        loc = []
        if where:
            loc.append(where)
        if line is not None:
            loc.append(f"line {line}")
        if column is not None:
            loc.append(f"column {column}")
        super().__init__(f"{message} ({', '.join(loc)})" if loc else message)


class VerificationError(GlrsError):
    """A structural check failed; `failures` names what was violated."""

    def __init__(self, message: str, failures: list[str] | None = None):
        self.failures = list(failures or [])
        super().__init__(message if not self.failures else f"{message}: {'; '.join(self.failures)}")
