"""Truncation control shared by all series evaluators."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class TruncationPolicy:
    """When to stop summing.

    A series stops once ``consecutive_small`` successive terms (or shells, for
    multiple series) each satisfy ``|term| <= rel_tol * max(|partial sum|, 1)``.
    ``max_terms`` bounds single series; ``max_shells`` bounds the total degree
    reached by the triple series, whose work grows cubically in it.
    """

    rel_tol: float = 1e-12
    max_terms: int = 100_000
    consecutive_small: int = 3
    max_shells: int = 600

    def __post_init__(self):
        if not 0.0 < self.rel_tol < 1.0:
            raise DomainError(f"rel_tol must lie in (0, 1), got {self.rel_tol}")
        if self.max_terms < 1:
            raise DomainError(f"max_terms must be >= 1, got {self.max_terms}")
        if self.consecutive_small < 1:
            raise DomainError(
                f"consecutive_small must be >= 1, got {self.consecutive_small}")
        if self.max_shells < 1:
            raise DomainError(f"max_shells must be >= 1, got {self.max_shells}")

    def is_small(self, term: float, partial: float) -> bool:
        return abs(term) <= self.rel_tol * max(abs(partial), 1.0)


DEFAULT_POLICY = TruncationPolicy()


@dataclass(frozen=True)
class SeriesResult:
    """Outcome of a series evaluation.

    ``error_estimate`` is the magnitude of the last term (or shell) included;
    it is zero when the series terminated exactly. ``abs_sum`` is the sum of
    term magnitudes, so ``abs_sum * 2.2e-16`` bounds the rounding error.
    """

    value: float
    terms_used: int
    error_estimate: float
    converged: bool
    abs_sum: float = 0.0

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "terms_used": self.terms_used,
            "error_estimate": self.error_estimate,
            "converged": self.converged,
            "abs_sum": self.abs_sum,
        }


class _Accumulator:
    """Running sum that applies the stopping rule term by term."""

    __slots__ = ("policy", "total", "abs_total", "small_run", "last", "count")

    def __init__(self, policy: TruncationPolicy, first: float):
        self.policy = policy
        self.total = first
        self.abs_total = abs(first)
        self.small_run = 0
        self.last = abs(first)
        self.count = 1

    def add(self, term: float, magnitude: float | None = None) -> bool:
        """Add a term; return True once the stopping rule is satisfied."""
        self.total += term
        self.abs_total += abs(term) if magnitude is None else magnitude
        self.last = abs(term)
        self.count += 1
        if self.policy.is_small(term, self.total):
            self.small_run += 1
        else:
            self.small_run = 0
        return self.small_run >= self.policy.consecutive_small

    def result(self, converged: bool, exact: bool = False) -> SeriesResult:
        return SeriesResult(
            value=self.total,
            terms_used=self.count,
            error_estimate=0.0 if exact else self.last,
            converged=converged,
            abs_sum=self.abs_total,
        )
