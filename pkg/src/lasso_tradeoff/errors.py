"""Semantic exception hierarchy for the lasso_tradeoff package."""

from __future__ import annotations


class TradeoffError(Exception):
    """Base class for all package errors."""


class DomainError(TradeoffError, ValueError):
    """An input violates a documented precondition (range, shape, finiteness)."""


class SolverError(TradeoffError, RuntimeError):
    """An iterative solver failed to converge or bracket its target.

    Carries the last iterate so callers can inspect how far the solve got.
    """

    def __init__(self, message: str, last_iterate: float | None = None):
        super().__init__(message)
        self.last_iterate = last_iterate


class InfeasibleTargetError(TradeoffError):
    """A requested (tpp, fdp) target lies outside the feasible region."""


class SearchExhaustedError(SolverError):
    """A parameter search ran out of budget; carries the closest point found."""

    def __init__(self, message: str, closest: tuple[float, float] | None = None):
        super().__init__(message)
        self.closest = closest
