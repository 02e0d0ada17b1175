"""Continued-fraction reduction of bounds on linear forms.

Two tools shrink a huge bound on the multiplier of a linear form
``m*kappa - n + mu`` to a small bound on the exponent ``k`` in

    0 < |m*kappa - n + mu| < A * B**(-k),   m <= M.

:func:`dujella_petho` needs ``mu`` away from the lattice generated by
``kappa``; :func:`legendre_reduce` handles ``mu == 0``.
:func:`guzman_luca` turns an implicit bound ``L / (log L)**r < H`` into an
explicit one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .contfrac import ContinuedFraction, InsufficientExpansion, a_max
from .realfield import DEFAULT_PRECISION, PrecisionReal, log_certified, nearest_int_distance

__all__ = [
    "EpsilonNotPositive",
    "HypothesisViolated",
    "ReductionProblem",
    "ReductionOutcome",
    "dujella_petho",
    "legendre_reduce",
    "guzman_luca",
    "integer_below",
]

DEFAULT_RETRIES = 10


class EpsilonNotPositive(ArithmeticError):
    """No convergent within the retry budget gave a certified positive epsilon."""


class HypothesisViolated(ValueError):
    pass


@dataclass(frozen=True)
class ReductionProblem:
    kappa: PrecisionReal
    mu: PrecisionReal
    M: int
    A: PrecisionReal
    B: PrecisionReal

    def __post_init__(self):
        if not self.A > 0:
            raise HypothesisViolated("A must be certified positive")
        if not self.B > 1:
            raise HypothesisViolated("B must be certified > 1")
        if self.M <= 1:
            raise HypothesisViolated("M must exceed 1")


@dataclass(frozen=True)
class ReductionOutcome:
    q_used: int
    q_index: int
    epsilon: PrecisionReal | None
    k_bound: int
    method: str
    k_real: PrecisionReal  # the certified threshold; k_bound is the last integer below it
    a_max: int | None = None

    @property
    def epsilon_lower(self) -> Fraction | None:
        return None if self.epsilon is None else self.epsilon.lower()


def integer_below(x: PrecisionReal) -> int:
    """Largest integer strictly below the upper end of the enclosure."""
    return x.ceil_upper() - 1


def _as_real(x, digits) -> PrecisionReal:
    return x if isinstance(x, PrecisionReal) else PrecisionReal.exact(x, digits)


def dujella_petho(problem: ReductionProblem, cf: ContinuedFraction,
                  retries: int = DEFAULT_RETRIES) -> ReductionOutcome:
    """Reduce with the first convergent q > 6M, advancing on epsilon <= 0.

    epsilon = ||mu q|| - M ||kappa q||; solutions need k < log(A q / epsilon) / log B.
    """
    kappa, mu, M = problem.kappa, problem.mu, problem.M
    start = cf.first_index_above(6 * M)
    for k in range(start, start + retries + 1):
        if k >= len(cf):
            raise InsufficientExpansion(f"need convergent index {k}, expansion has {len(cf)}")
        q = cf.q(k)
        kappa_dist = nearest_int_distance(kappa * q)
        eps = nearest_int_distance(mu * q) - M * kappa_dist
        if eps.is_positive():
            digits = max(kappa.digits, mu.digits)
            # use the certified lower end of epsilon; A and B enter as balls
            eps_low = PrecisionReal.exact(eps.lower(), digits)
            threshold = log_certified(problem.A * q / eps_low) / log_certified(problem.B)
            return ReductionOutcome(q, k, eps, integer_below(threshold), "dujella-petho", threshold)
    raise EpsilonNotPositive(
        f"epsilon not certified positive for convergents {start}..{start + retries}"
    )


def legendre_reduce(kappa: PrecisionReal, cf: ContinuedFraction, M: int, A, B) -> ReductionOutcome:
    """Bound k in |kappa - x/y| < A / (B**k y) for 0 < y < M.

    Combined with |kappa - x/y| >= 1 / ((a(M)+2) y**2) this forces
    k < log((a(M)+2) A M) / log B.
    """
    digits = kappa.digits
    A, B = _as_real(A, digits), _as_real(B, digits)
    n = cf.first_index_above(M)
    p, q = cf.convergents[n]
    # the expansion must belong to kappa
    if not abs(kappa * q - p) < Fraction(1):
        raise ValueError("continued fraction does not match kappa")
    a = a_max(cf, M)
    threshold = log_certified((a + 2) * A * M) / log_certified(B)
    return ReductionOutcome(q, n, None, integer_below(threshold), "legendre", threshold, a)


def guzman_luca(r: int, H, relation: str = "log") -> PrecisionReal:
    """Explicit bound on L from an implicit one.

    ``relation="log"``: L / (log L)**r < H gives L < 2**r H (log H)**r.
    ``relation="one_plus_log"``: L / (1 + log L)**r < H; substituting
    e*L gives L < 2**r H (1 + log H)**r.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    H = _as_real(H, DEFAULT_PRECISION)
    if not H > (4 * r * r) ** r:
        raise HypothesisViolated(f"need H > (4 r^2)^r = {(4 * r * r) ** r}")
    log_h = log_certified(H)
    if relation == "log":
        return 2 ** r * H * log_h ** r
    if relation == "one_plus_log":
        return 2 ** r * H * (1 + log_h) ** r
    raise ValueError(f"unknown relation {relation!r}")
