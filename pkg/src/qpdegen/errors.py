"""Exception types raised by qpdegen.

The CLI maps these onto exit codes: :class:`DomainError` -> 2,
:class:`NotFoundError` and :class:`ConvergenceError` -> 3.
"""

from __future__ import annotations


class QPDegenError(Exception):
    """Base class for all library errors."""


class DomainError(QPDegenError, ValueError):
    """A parameter lies outside the admissible domain."""


class NotFoundError(QPDegenError):
    """No sign change (hence no root) in the searched interval."""


class ConvergenceError(QPDegenError):
    """An iterative solver ran out of iterations.

    The best estimate reached so far is kept on ``best``.
    """

    def __init__(self, message: str, best: float | None = None) -> None:
        super().__init__(message)
        self.best = best


class EvaluationError(QPDegenError, ArithmeticError):
    """A scanned function returned a non-finite value."""

    def __init__(self, message: str, x: float) -> None:
        super().__init__(message)
        self.x = x
