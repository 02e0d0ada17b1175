"""Exact Perrin terms and certified checks of their Binet behaviour."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache

from .realfield import (
    DEFAULT_PRECISION,
    PrecisionExhausted,
    PrecisionReal,
    log_certified,
    plastic_root,
    sqrt_certified,
)

__all__ = [
    "RecurrenceSpec",
    "PERRIN",
    "SequenceCache",
    "RootData",
    "root_data",
    "default_cache",
    "term",
    "binet_residual",
    "growth_envelope_check",
]


@dataclass(frozen=True)
class RecurrenceSpec:
    """X[n+order] = sum(coefficients[i] * X[n+order-1-i])."""

    order: int
    coefficients: tuple[int, ...]
    initial_terms: tuple[int, ...]

    def __post_init__(self):
        if not (self.order == len(self.coefficients) == len(self.initial_terms)):
            raise ValueError("order, coefficients and initial_terms disagree")

    def characteristic_polynomial(self) -> tuple[int, ...]:
        """Coefficients of the monic characteristic polynomial, highest first."""
        return (1,) + tuple(-c for c in self.coefficients)


PERRIN = RecurrenceSpec(order=3, coefficients=(0, 1, 1), initial_terms=(3, 0, 2))


class SequenceCache:
    """Append-only list of exact terms; extension is serialized by a lock."""

    def __init__(self, spec: RecurrenceSpec = PERRIN):
        self.spec = spec
        self.terms: list[int] = list(spec.initial_terms)
        self._lock = threading.Lock()

    def __len__(self):
        return len(self.terms)

    def extend_to(self, n: int) -> None:
        if n < len(self.terms):
            return
        with self._lock:
            terms = self.terms
            coeffs = self.spec.coefficients
            while len(terms) <= n:
                terms.append(sum(c * terms[-1 - i] for i, c in enumerate(coeffs) if c))

    def __getitem__(self, n: int) -> int:
        return term(self, n)


_DEFAULT = SequenceCache()


def default_cache() -> SequenceCache:
    return _DEFAULT


def term(cache: SequenceCache, n: int) -> int:
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n >= len(cache.terms):
        cache.extend_to(n)
    return cache.terms[n]


@dataclass(frozen=True)
class RootData:
    alpha: PrecisionReal
    beta_modulus: PrecisionReal
    log_alpha: PrecisionReal

    @property
    def precision(self) -> int:
        return self.alpha.digits


@lru_cache(maxsize=16)
def root_data(precision: int = DEFAULT_PRECISION) -> RootData:
    alpha = plastic_root(precision)
    # |beta| = |gamma| = alpha**(-1/2) since alpha * |beta|**2 = 1
    return RootData(
        alpha=alpha,
        beta_modulus=1 / sqrt_certified(alpha),
        log_alpha=log_certified(alpha),
    )


def binet_residual(cache: SequenceCache, roots: RootData, n: int,
                   precision: int | None = None) -> PrecisionReal:
    """Enclosure of |P_n - alpha**n|, certified below 3 * alpha**(-n/2).

    Raises PrecisionExhausted when the enclosure cannot separate.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if precision is not None and precision != roots.precision:
        roots = root_data(precision)
    residual = abs(term(cache, n) - roots.alpha ** n)
    envelope = 3 * roots.beta_modulus ** n
    if not residual < envelope:
        raise PrecisionExhausted(f"cannot certify |e({n})| < 3 alpha^(-{n}/2)")
    return residual


def growth_envelope_check(cache: SequenceCache, roots: RootData, n: int) -> bool:
    """alpha**(n-2) <= P_n <= alpha**(n+1), decided on enclosures."""
    if n < 2:
        raise ValueError("n must be at least 2")
    p = term(cache, n)
    low = roots.alpha ** (n - 2)
    high = roots.alpha ** (n + 1)
    ok_low, ok_high = low <= p, high >= p
    if ok_low and ok_high:
        return True
    # a failed comparison is only a verdict when the enclosures separate the other way
    if (not ok_low and not low > p) or (not ok_high and not high < p):
        raise PrecisionExhausted(f"growth envelope undecided at n={n}")
    return False
