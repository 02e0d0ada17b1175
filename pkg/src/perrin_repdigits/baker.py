"""Heights, the Bugeaud-Mignotte-Siksek lower bound, and the initial bounds.

The initial bound on ``n`` is a chain of inequalities.  Each link is
evaluated twice:

* ``fidelity`` mode feeds the fixed envelope constant of every link into the
  next one, after certifying that the value computed from the previous
  link does not exceed it;
* ``audit`` mode feeds the computed value itself (rounded up), giving the
  tightest chain these estimates allow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .realfield import DEFAULT_PRECISION, PrecisionReal, log_certified, sqrt_certified
from .reduction import guzman_luca
from .sequences import RootData, root_data

__all__ = [
    "MODES",
    "ENVELOPE_CONSTANTS",
    "BoundChainError",
    "HeightValue",
    "LinearFormInstance",
    "height_rational",
    "height_alpha",
    "height_eta1_step2",
    "bms_constant",
    "bms_lower_bound",
    "admissible_A",
    "BoundStep",
    "BoundChain",
    "bound_chain",
    "step1_ell_bound",
    "step2_n_bound",
    "digit_window",
]

MODES = ("fidelity", "audit")

# envelope value of every link, in chain order
ENVELOPE_CONSTANTS = {
    "step1_A1": Fraction(15),
    "step1_baker": Fraction("1.45e30"),
    "ell_coefficient": Fraction("1.46e30"),
    "height_coefficient": Fraction("1.47e30"),
    "A1_coefficient": Fraction("4.41e30"),
    "step2_baker_factor": Fraction("6e12"),
    "step2_coefficient": Fraction("3e43"),
    "n_implicit": Fraction("1.10e44"),
    "n_bound": Fraction("4.6e48"),
    "ell_plus_m_bound": Fraction("6.0e47"),
}

# upper bound on |Gamma_1| * 10**ell and on |Gamma_2| * alpha**n
GAMMA1_NUMERATOR = 46
GAMMA2_NUMERATOR = 4


class BoundChainError(ArithmeticError):
    """An envelope constant is smaller than the value it must dominate."""


@dataclass(frozen=True)
class HeightValue:
    value: PrecisionReal
    description: str


@dataclass(frozen=True)
class LinearFormInstance:
    t: int
    D: int
    B_param: PrecisionReal | None
    A: tuple

    def __post_init__(self):
        if self.t < 1 or self.D < 1:
            raise ValueError("t and D must be positive")
        if len(self.A) != self.t:
            raise ValueError("need one A_j per multiplicand")


def height_rational(p: int, q: int, precision: int = DEFAULT_PRECISION) -> HeightValue:
    if q <= 0 or math.gcd(p, q) != 1:
        raise ValueError(f"{p}/{q} is not a reduced fraction with positive denominator")
    return HeightValue(log_certified(max(abs(p), q), precision), f"h({p}/{q})")


def height_alpha(roots: RootData) -> HeightValue:
    # x^3 - x - 1 is monic with a single root of modulus > 1
    return HeightValue(roots.log_alpha / 3, "h(alpha)")


def height_eta1_step2(d1: int, d2: int, ell: int, precision: int = DEFAULT_PRECISION) -> HeightValue:
    """Upper bound 4 log 9 + ell log 10 on h((d1 10^ell - (d1 - d2)) / 9).

    From subadditivity: h(9) + ell h(10) + h(d1) + h(d1 - d2) + log 2.
    """
    if ell < 1 or d1 == d2 or not (1 <= d1 <= 9 and 0 <= d2 <= 9):
        raise ValueError("invalid digits or block length")
    bound = 4 * log_certified(9, precision) + ell * log_certified(10, precision)
    return HeightValue(bound, f"h(({d1}*10^{ell} - {d1 - d2})/9) upper bound")


def bms_constant(t: int, D: int, A, precision: int = DEFAULT_PRECISION) -> PrecisionReal:
    """1.4 * 30^(t+3) * t^4.5 * D^2 * (1 + log D) * A_1 ... A_t."""
    c = PrecisionReal.exact(Fraction(14, 10) * 30 ** (t + 3) * t ** 4 * D * D, precision)
    c = c * sqrt_certified(PrecisionReal.exact(t, precision))
    c = c * (1 + log_certified(D, precision))
    for a in A:
        c = c * a
    return c


def bms_lower_bound(instance: LinearFormInstance, precision: int = DEFAULT_PRECISION) -> PrecisionReal:
    """Right-hand side of log|Gamma| > -c (1 + log B); negative."""
    if instance.B_param is None:
        raise ValueError("B is symbolic; use bms_constant for the coefficient of (1 + log B)")
    c = bms_constant(instance.t, instance.D, instance.A, precision)
    return -(c * (1 + log_certified(instance.B_param)))


def admissible_A(A, D: int, height: PrecisionReal, abs_log: PrecisionReal) -> bool:
    """A >= max(D h(eta), |log eta|, 0.16), certified."""
    return bool(A >= D * height and A >= abs_log and A >= Fraction(16, 100))


@dataclass(frozen=True)
class BoundStep:
    name: str
    statement: str
    computed: PrecisionReal
    envelope: Fraction
    used: Fraction


@dataclass
class BoundChain:
    mode: str
    precision: int
    steps: dict = field(default_factory=dict)
    # n bound from reading the implicit inequality with (1 + log n); both modes record it
    sound_n_bound: PrecisionReal | None = None
    sound_ell_plus_m_bound: PrecisionReal | None = None

    def used(self, name: str) -> Fraction:
        return self.steps[name].used

    @property
    def n_bound(self) -> int:
        return math.ceil(self.used("n_bound"))

    @property
    def ell_plus_m_bound(self) -> int:
        return math.ceil(self.used("ell_plus_m_bound"))


def _round_up(x: PrecisionReal, sig: int = 6) -> Fraction:
    u = x.upper()
    e = len(str(u.numerator)) - len(str(u.denominator))
    scale = Fraction(10) ** (e - sig)
    return math.ceil(u / scale) * scale


def bound_chain(mode: str = "fidelity", precision: int = DEFAULT_PRECISION) -> BoundChain:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    roots = root_data(precision)
    log_alpha = roots.log_alpha
    log9 = log_certified(9, precision)
    log10 = log_certified(10, precision)
    chain = BoundChain(mode, precision)

    def link(name, statement, computed, integral=False):
        envelope = ENVELOPE_CONSTANTS[name]
        if mode == "fidelity":
            if not computed <= envelope:
                raise BoundChainError(f"{name}: computed {computed!r} exceeds envelope {envelope}")
            used = envelope
        else:
            used = Fraction(computed.ceil_upper()) if integral else _round_up(computed)
        chain.steps[name] = BoundStep(name, statement, computed, envelope, used)
        return PrecisionReal.exact(used, precision)

    # Step 1: eta = (9/d1, alpha, 10), b = (1, n, -(ell+m)); h(9/d1) = log 9 at most
    a1 = link("step1_A1", "A_1 >= 3 h(9/d1)", 3 * log9)
    c1 = link("step1_baker", "log|Gamma_1| > -c (1 + log n)",
              bms_constant(3, 3, [a1, log_alpha, 3 * log10], precision))
    ell_c = link("ell_coefficient", "ell log 10 < c (1 + log n)",
                 c1 + log_certified(GAMMA1_NUMERATOR, precision))
    # Step 2: eta_1 = (d1 10^ell - (d1 - d2)) / 9
    h_c = link("height_coefficient", "h(eta_1) < c (1 + log n)", ell_c + 4 * log9)
    a1_c = link("A1_coefficient", "A_1 = c (1 + log n)", 3 * h_c)
    f2 = link("step2_baker_factor", "log|Gamma_2| > -c (1 + log n) A_1",
              bms_constant(3, 3, [1, log_alpha, 3 * log10], precision))
    c2 = link("step2_coefficient", "log|Gamma_2| > -c (1 + log n)^2", f2 * a1_c)
    h = link("n_implicit", "n < c (1 + log n)^2",
             (c2 + log_certified(GAMMA2_NUMERATOR, precision)) / log_alpha)
    # n / (1 + log n)^2 < H: the envelope chain reads this as n / (log n)^2 < H
    relation = "log" if mode == "fidelity" else "one_plus_log"
    n_b = link("n_bound", "n < c", guzman_luca(2, h, relation))
    # 10^(ell+m-1) <= P_n <= alpha^(n+1)
    def digits_bound(n):
        return ((n + 1) * log_alpha + log10) / log10

    link("ell_plus_m_bound", "ell + m < c", digits_bound(n_b), integral=True)
    chain.sound_n_bound = guzman_luca(2, h, "one_plus_log")
    chain.sound_ell_plus_m_bound = digits_bound(chain.sound_n_bound)
    return chain


def step1_ell_bound(mode: str = "fidelity", precision: int = DEFAULT_PRECISION) -> BoundStep:
    """ell log 10 < C (1 + log n); the step's ``used`` value is C."""
    return bound_chain(mode, precision).steps["ell_coefficient"]


def step2_n_bound(mode: str = "fidelity", precision: int = DEFAULT_PRECISION) -> tuple[int, int]:
    """(bound on n, bound on ell + m)."""
    chain = bound_chain(mode, precision)
    return chain.n_bound, chain.ell_plus_m_bound


def digit_window(n: int, roots: RootData | None = None) -> range:
    """Admissible ell + m for P_n with ell + m decimal digits.

    From alpha^(n-2) <= P_n < 10^(ell+m) and 10^(ell+m-1) <= P_n <= alpha^(n+1):
    (n-2) log alpha / log 10 < ell + m <= (n+1) log alpha / log 10 + 1.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    roots = roots or root_data()
    log10 = log_certified(10, roots.precision)
    low = (n - 2) * roots.log_alpha / log10
    high = (n + 1) * roots.log_alpha / log10 + 1
    return range(low.floor_lower() + 1, math.floor(high.upper()) + 1)
