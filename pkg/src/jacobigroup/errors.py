"""Exception hierarchy shared by all modules."""


class JacobiError(Exception):
    """Base class for errors raised by :mod:`jacobigroup`."""


class BasisMismatchError(JacobiError, ValueError):
    """Two operands live on different truncated bases."""


class DomainError(JacobiError, ValueError):
    """A parameter lies outside the domain of the construction (|w| >= 1, k <= 1/2, ...)."""


class GradeError(JacobiError, ValueError):
    """An operation needs a graded (nilpotent) operator, or a declared grade is violated."""


class CutoffBudgetError(JacobiError, ValueError):
    """The requested computation does not fit in the truncated space.

    ``required`` holds the smallest cutoff (SW ``N`` or DS level ``D``) that would do.
    """

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required


class LeakageError(JacobiError, ValueError):
    """Squared norm lost to truncation exceeds the caller's budget."""

    def __init__(self, message, leakage=None):
        super().__init__(message)
        self.leakage = leakage


class VacuumError(JacobiError, ZeroDivisionError):
    """Mandel's parameter requested for a state with vanishing mean photon number."""
