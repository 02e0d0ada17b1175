"""Certified continued fractions, convergents and the Legendre criterion."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Union

from .realfield import (
    DEFAULT_PRECISION,
    PrecisionExhausted,
    PrecisionReal,
    log_certified,
    max_precision,
)
from .sequences import root_data

__all__ = [
    "InsufficientExpansion",
    "ContinuedFraction",
    "expand",
    "a_max",
    "legendre_lower_bound",
    "tau",
    "tau_expansion",
]


class InsufficientExpansion(LookupError):
    """The expansion does not reach the requested convergent."""


@dataclass(frozen=True)
class ContinuedFraction:
    quotients: tuple[int, ...]
    convergents: tuple[tuple[int, int], ...]
    precision: int | None = None

    @classmethod
    def from_quotients(cls, quotients, precision=None) -> ContinuedFraction:
        quotients = tuple(int(a) for a in quotients)
        convs = []
        p0, p1 = 1, 0
        q0, q1 = 0, 1
        for a in quotients:
            p0, p1 = a * p0 + p1, p0
            q0, q1 = a * q0 + q1, q0
            convs.append((p0, q0))
        return cls(quotients, tuple(convs), precision)

    def __len__(self):
        return len(self.quotients)

    def p(self, k: int) -> int:
        return self.convergents[k][0]

    def q(self, k: int) -> int:
        return self.convergents[k][1]

    def first_index_above(self, bound) -> int:
        """Least k with q_k > bound."""
        for k, (_, q) in enumerate(self.convergents):
            if q > bound:
                return k
        raise InsufficientExpansion(f"no convergent denominator exceeds {bound}")


Source = Union[Callable[[int], Union[PrecisionReal, Fraction, int]], PrecisionReal, Fraction, int]


def _enclosure(source: Source, digits: int) -> tuple[Fraction, Fraction]:
    x = source(digits) if callable(source) else source
    if isinstance(x, PrecisionReal):
        return x.lower(), x.upper()
    x = Fraction(x)
    return x, x


def _quotients(lo: Fraction, hi: Fraction, want: Callable[[list[int], tuple[int, int]], bool]):
    """Expand while floor(lo) == floor(hi).  Returns (quotients, complete)."""
    quotients: list[int] = []
    p0, p1, q0, q1 = 1, 0, 0, 1
    while want(quotients, (p0, q0)):
        a = lo.numerator // lo.denominator
        if hi.numerator // hi.denominator != a:
            return quotients, False
        quotients.append(a)
        p0, p1 = a * p0 + p1, p0
        q0, q1 = a * q0 + q1, q0
        if lo == hi == a:
            return quotients, True
        if lo == a:
            return quotients, False
        lo, hi = 1 / (hi - a), 1 / (lo - a)
    return quotients, True


def expand(source: Source, count: int | None = None, until_q=None, extra: int = 0,
           precision: int = DEFAULT_PRECISION) -> ContinuedFraction:
    """Continued fraction of ``source`` with every quotient certified.

    ``source`` is either a fixed value or a callable mapping decimal digits
    to an enclosure.  Stop after ``count`` quotients, or ``extra`` quotients
    past the first convergent whose denominator exceeds ``until_q``.  When a
    quotient cannot be certified the whole expansion restarts at doubled
    precision.
    """
    if (count is None) == (until_q is None):
        raise ValueError("give exactly one of count or until_q")

    def want(quotients, conv):
        if count is not None:
            return len(quotients) < count
        k = want.reached
        if k is None and quotients and conv[1] > until_q:
            want.reached = k = len(quotients)
        return k is None or len(quotients) < k + extra

    digits = precision
    cap = max_precision()
    while True:
        want.reached = None
        lo, hi = _enclosure(source, digits)
        quotients, complete = _quotients(lo, hi, want)
        if complete:
            return ContinuedFraction.from_quotients(quotients, digits if lo != hi else None)
        if not callable(source):
            raise PrecisionExhausted("fixed enclosure too wide for the requested expansion")
        if digits >= cap:
            raise PrecisionExhausted(f"expansion needs more than {cap} digits")
        digits = min(2 * digits, cap)


def a_max(cf: ContinuedFraction, M) -> int:
    """max(a_0..a_N) where N is the least index with q_N > M."""
    n = cf.first_index_above(M)
    return max(cf.quotients[: n + 1])


def legendre_lower_bound(cf: ContinuedFraction, M, y: int, x: int | None = None) -> Fraction:
    """Lower bound 1 / ((a(M) + 2) y**2) on |kappa - x/y| for 0 < y < M."""
    if not 0 < y < M:
        raise ValueError("need 0 < y < M")
    return Fraction(1, (a_max(cf, M) + 2) * y * y)


@lru_cache(maxsize=16)
def tau(precision: int = DEFAULT_PRECISION) -> PrecisionReal:
    """log 10 / log alpha."""
    return log_certified(10, precision) / root_data(precision).log_alpha


@lru_cache(maxsize=32)
def tau_expansion(until_q: int, extra: int = 12, precision: int = DEFAULT_PRECISION) -> ContinuedFraction:
    return expand(tau, until_q=until_q, extra=extra, precision=precision)
