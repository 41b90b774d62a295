"""
Exception hierarchy shared by every lllocal module.

Verifiers never raise for invalid candidate solutions; they return verdicts.
These exceptions signal bad inputs, exceeded budgets, failed preconditions
and broken internal invariants.
"""
from typing import Any


class LllocalError(Exception):
    """Base class for all lllocal errors."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(message)
        self.details = details or {}


class InvalidInputError(LllocalError):
    """Raised when an input object violates its schema or a documented precondition."""


class BudgetExceededError(LllocalError):
    """Raised when an exhaustive step would exceed its configured size cap."""


class PreconditionError(LllocalError):
    """Raised when an LLL-type condition or a solver hypothesis does not hold."""


class UnsatisfiableError(LllocalError):
    """Raised when an instance has no solution (a legitimate outcome)."""


class PrecisionExhaustedError(LllocalError):
    """Raised when a certified comparison stays undecided at the precision cap."""


class AuditError(LllocalError):
    """Raised when an internal post-condition fails. Always indicates a bug."""
