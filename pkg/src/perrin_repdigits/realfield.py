"""Certified real arithmetic on midpoint-radius balls.

A :class:`PrecisionReal` stores an integer midpoint and an integer radius,
both counted in units of ``2**-bits``.  Every operation rounds outward, so
the closed ball ``[midpoint - radius, midpoint + radius]`` always contains
the true value.  Inequalities are decided only when the balls separate.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "DEFAULT_PRECISION",
    "PrecisionError",
    "PrecisionExhausted",
    "AmbiguousDistance",
    "DomainError",
    "PrecisionReal",
    "digits_to_bits",
    "max_precision",
    "plastic_root",
    "log_certified",
    "sqrt_certified",
    "nearest_int_distance",
    "format_decimal",
]

DEFAULT_PRECISION = 256
HARD_PRECISION_CAP = 1 << 16

# guard bits carried inside the logarithm series
_LOG_GUARD = 64
# logarithm argument reduction table has 2**_TABLE_BITS entries
_TABLE_BITS = 6


class PrecisionError(ArithmeticError):
    """An enclosure is too wide to decide the requested question."""


class PrecisionExhausted(PrecisionError):
    """Raised when a certification needs more working digits."""


class AmbiguousDistance(PrecisionExhausted):
    """The ball straddles a half-integer, so ||x|| is undetermined."""


class DomainError(ValueError):
    """Operation undefined on (part of) the input enclosure."""


def digits_to_bits(digits: int) -> int:
    # 3321929 / 10**6 > log2(10)
    return (digits * 3321929 + 999_999) // 1_000_000 + 16


def max_precision() -> int:
    """Escalation cap in decimal digits (``SOLVER_MAX_PRECISION`` overrides)."""
    raw = os.environ.get("SOLVER_MAX_PRECISION")
    if raw:
        return max(1, min(int(raw), HARD_PRECISION_CAP))
    return HARD_PRECISION_CAP


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


class PrecisionReal:
    """A real number known to lie in ``[man - rad, man + rad] * 2**-bits``.

    ``digits`` is the working precision in decimal digits; the binary
    precision is derived from it.  Instances are immutable.
    """

    __slots__ = ("man", "rad", "digits")

    def __init__(self, man: int, rad: int, digits: int = DEFAULT_PRECISION):
        if rad < 0:
            raise ValueError("radius must be nonnegative")
        object.__setattr__(self, "man", int(man))
        object.__setattr__(self, "rad", int(rad))
        object.__setattr__(self, "digits", int(digits))

    def __setattr__(self, name, value):
        raise AttributeError("PrecisionReal is immutable")

    # -- construction -----------------------------------------------------

    @classmethod
    def exact(cls, value, digits: int = DEFAULT_PRECISION) -> PrecisionReal:
        """Enclose an int, Fraction or decimal string."""
        if isinstance(value, PrecisionReal):
            return value
        v = Fraction(value)
        bits = digits_to_bits(digits)
        q, r = divmod(v.numerator << bits, v.denominator)
        return cls(q, 1 if r else 0, digits)

    @classmethod
    def from_interval(cls, lo, hi, digits: int = DEFAULT_PRECISION) -> PrecisionReal:
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise ValueError("empty interval")
        bits = digits_to_bits(digits)
        a = math.floor(lo * (1 << bits))
        b = math.ceil(hi * (1 << bits))
        man = (a + b) // 2
        return cls(man, max(man - a, b - man), digits)

    # -- views ------------------------------------------------------------

    @property
    def bits(self) -> int:
        return digits_to_bits(self.digits)

    @property
    def working_precision(self) -> int:
        return self.digits

    @property
    def midpoint(self) -> Fraction:
        return Fraction(self.man, 1 << self.bits)

    @property
    def radius(self) -> Fraction:
        return Fraction(self.rad, 1 << self.bits)

    def lower(self) -> Fraction:
        return Fraction(self.man - self.rad, 1 << self.bits)

    def upper(self) -> Fraction:
        return Fraction(self.man + self.rad, 1 << self.bits)

    def contains(self, x) -> bool:
        if isinstance(x, PrecisionReal):
            return self.lower() <= x.lower() and x.upper() <= self.upper()
        x = Fraction(x)
        return self.lower() <= x <= self.upper()

    def overlaps(self, other) -> bool:
        other = self._coerce(other)
        return not (self.upper() < other.lower() or other.upper() < self.lower())

    def is_positive(self) -> bool:
        return self.man - self.rad > 0

    def is_negative(self) -> bool:
        return self.man + self.rad < 0

    def contains_zero(self) -> bool:
        return abs(self.man) <= self.rad

    def floor_lower(self) -> int:
        return (self.man - self.rad) >> self.bits

    def ceil_upper(self) -> int:
        return -((-(self.man + self.rad)) >> self.bits)

    def with_digits(self, digits: int) -> PrecisionReal:
        """Re-express at another working precision (outward when lowering)."""
        shift = digits_to_bits(digits) - self.bits
        if shift >= 0:
            return PrecisionReal(self.man << shift, self.rad << shift, digits)
        man = self.man >> -shift
        return PrecisionReal(man, _ceil_div(self.rad, 1 << -shift) + 1, digits)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> PrecisionReal:
        if isinstance(other, PrecisionReal):
            return other
        if isinstance(other, (int, Fraction, str)):
            return PrecisionReal.exact(other, self.digits)
        return NotImplemented

    @staticmethod
    def _align(a: PrecisionReal, b: PrecisionReal):
        if a.digits == b.digits:
            return a, b, a.digits
        d = max(a.digits, b.digits)
        return a.with_digits(d), b.with_digits(d), d

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, d = self._align(self, other)
        return PrecisionReal(a.man + b.man, a.rad + b.rad, d)

    __radd__ = __add__

    def __neg__(self):
        return PrecisionReal(-self.man, self.rad, self.digits)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, d = self._align(self, other)
        bits = digits_to_bits(d)
        prod = a.man * b.man
        man = prod >> bits
        err = a.rad * abs(b.man) + b.rad * abs(a.man) + a.rad * b.rad
        rad = _ceil_div(err, 1 << bits)
        if prod - (man << bits):
            rad += 1
        return PrecisionReal(man, rad, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, d = self._align(self, other)
        if abs(b.man) <= b.rad:
            raise DomainError("division by an enclosure containing zero")
        bits = digits_to_bits(d)
        num = a.man << bits
        man, r = divmod(num, b.man)
        den = abs(b.man)
        err = (a.rad * den + abs(a.man) * b.rad) << bits
        rad = _ceil_div(err, den * (den - b.rad)) if err else 0
        if r:
            rad += 1
        return PrecisionReal(man, rad, d)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("only integer powers are supported")
        if k < 0:
            return PrecisionReal.exact(1, self.digits) / (self ** -k)
        result = PrecisionReal.exact(1, self.digits)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __abs__(self):
        if self.man - self.rad >= 0:
            return self
        if self.man + self.rad <= 0:
            return -self
        hi = max(abs(self.man - self.rad), abs(self.man + self.rad))
        return PrecisionReal(_ceil_div(hi, 2), _ceil_div(hi, 2), self.digits)

    # -- certified comparisons ---------------------------------------------
    # True only when the enclosures separate; False means "not certified".

    def __lt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.upper() < other.lower()

    def __gt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.lower() > other.upper()

    def __le__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.upper() <= other.lower()

    def __ge__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.lower() >= other.upper()

    def __eq__(self, other):
        if not isinstance(other, PrecisionReal):
            return NotImplemented
        return (self.man, self.rad, self.digits) == (other.man, other.rad, other.digits)

    def __hash__(self):
        return hash((self.man, self.rad, self.digits))

    def __float__(self):
        return float(self.midpoint)

    def __repr__(self):
        return "PrecisionReal({} +/- {:.3g}, digits={})".format(
            format_decimal(self.midpoint, 20), float(self.radius), self.digits
        )


def format_decimal(x, sig: int = 15, rounding: str = "nearest") -> str:
    """Render a Fraction in scientific notation with ``sig`` digits.

    ``rounding`` may be ``"down"`` (toward -inf), ``"up"`` or ``"nearest"``.
    """
    if isinstance(x, PrecisionReal):
        x = {"down": x.lower, "up": x.upper}.get(rounding, lambda: x.midpoint)()
    x = Fraction(x)
    if x == 0:
        return "0"
    sign = "-" if x < 0 else ""
    ax = abs(x)
    if sign and rounding in ("down", "up"):
        rounding = "up" if rounding == "down" else "down"
    e = len(str(ax.numerator)) - len(str(ax.denominator))
    if Fraction(10) ** e > ax:
        e -= 1
    scaled = ax / Fraction(10) ** (e - sig + 1)
    if rounding == "down":
        digits = math.floor(scaled)
    elif rounding == "up":
        digits = math.ceil(scaled)
    else:
        digits = round(scaled)
    if digits >= 10 ** sig:
        digits //= 10
        e += 1
    s = str(digits)
    mant = s[0] + ("." + s[1:].rstrip("0") if s[1:].rstrip("0") else "")
    return "{}{}e{:+d}".format(sign, mant, e) if e else sign + mant


# -- plastic number --------------------------------------------------------


def _phi_sign(a: int, bits: int) -> int:
    # sign of x^3 - x - 1 at x = a / 2**bits, exactly
    v = a ** 3 - (a << (2 * bits)) - (1 << (3 * bits))
    return (v > 0) - (v < 0)


@lru_cache(maxsize=32)
def plastic_root(precision: int = DEFAULT_PRECISION) -> PrecisionReal:
    """Certified enclosure of the real root of x^3 - x - 1.

    Newton's method on fixed-point integers, then an exact sign check of
    the cubic at both ends of the returned ball.
    """
    if precision < 1:
        raise ValueError("precision must be positive")
    bits = digits_to_bits(precision)
    one = 1 << bits
    x = (int(1.324717957244746 * (1 << 52)) << bits) >> 52
    for _ in range(4 * bits.bit_length() + 8):
        f = (x ** 3 >> (2 * bits)) - x - one
        fp = (3 * x * x >> bits) - one
        step = (f << bits) // fp
        x -= step
        if abs(step) <= 1:
            break
    r = 1
    while not (_phi_sign(x - r, bits) < 0 < _phi_sign(x + r, bits)):
        r *= 2
        if r > one:
            raise PrecisionExhausted("root isolation failed")
    return PrecisionReal(x, r, precision)


# -- logarithm -------------------------------------------------------------


def _atanh_series(z: int, w: int):
    """Fixed-point atanh(z / 2**w) for 0 <= z < 2**w / 3; returns (value, err_ulps)."""
    if z == 0:
        return 0, 0
    z2 = z * z >> w
    term = z
    total = z
    k = 1
    steps = 0
    while term:
        term = term * z2 >> w
        k += 2
        total += term // k
        steps += 1
    # per-step truncation plus the tail hidden below the last nonzero term
    return total, 4 * steps + 4


@lru_cache(maxsize=64)
def _log2_fixed(w: int):
    v, e = _atanh_series((1 << w) // 3, w)
    return 2 * v, 2 * e + 2


@lru_cache(maxsize=4096)
def _log_table_fixed(j: int, w: int):
    # log(1 + j / 2**_TABLE_BITS) = 2 atanh(j / (2**(_TABLE_BITS+1) + j))
    v, e = _atanh_series((j << w) // ((2 << _TABLE_BITS) + j), w)
    return 2 * v, 2 * e + 2


def _log_fixed(man: int, bits: int):
    """log(man / 2**bits) for man > 0 at fixed point ``bits``; returns (value, rad)."""
    w = bits + _LOG_GUARD
    L = man.bit_length()
    e = L - 1 - bits
    shift = w - (L - 1)
    y = man << shift if shift >= 0 else man >> -shift
    err = 0 if shift >= 0 else 1
    one = 1 << w
    j = (y - one) >> (w - _TABLE_BITS)
    t = 0
    if j:
        t, et = _log_table_fixed(j, w)
        err += et
        c = (1 << _TABLE_BITS) + j
        y = (y << _TABLE_BITS) // c
        err += 1
    z = ((y - one) << w) // (y + one)
    s, es = _atanh_series(z, w)
    err += 2 * es + 4
    total = 2 * s + t
    if e:
        l2, e2 = _log2_fixed(w)
        total += e * l2
        err += abs(e) * e2
    err = (err << 1) + 2
    return total >> _LOG_GUARD, _ceil_div(err, 1 << _LOG_GUARD) + 1


def log_certified(x, precision: int | None = None) -> PrecisionReal:
    """Certified natural logarithm of a positive enclosure."""
    if not isinstance(x, PrecisionReal):
        x = PrecisionReal.exact(x, precision or DEFAULT_PRECISION)
    if precision is not None and precision != x.digits:
        x = x.with_digits(max(precision, x.digits))
    if x.man - x.rad <= 0:
        raise DomainError("logarithm of an enclosure touching zero")
    bits = x.bits
    man, rad = _log_fixed(x.man, bits)
    if x.rad:
        # |log X - log x0| <= r / (x0 - r)
        rad += _ceil_div(x.rad << bits, x.man - x.rad)
    return PrecisionReal(man, rad, x.digits)


def sqrt_certified(x: PrecisionReal) -> PrecisionReal:
    if x.man - x.rad <= 0:
        raise DomainError("square root of an enclosure touching zero")
    bits = x.bits
    scaled = x.man << bits
    man = math.isqrt(scaled)
    rad = 0 if man * man == scaled else 1
    if x.rad:
        s = math.isqrt((x.man - x.rad) << bits)
        if s == 0:
            raise PrecisionExhausted("enclosure too wide for sqrt")
        rad += _ceil_div(x.rad << bits, s)
    return PrecisionReal(man, rad, x.digits)


def nearest_int_distance(x: PrecisionReal) -> PrecisionReal:
    """Certified enclosure of min_n |x - n| over integers n.

    Raises AmbiguousDistance when the radius reaches 1/4.
    """
    bits = x.bits
    half = 1 << (bits - 1)
    if 2 * x.rad >= half:
        raise AmbiguousDistance("radius must be below 1/4")
    n = (x.man + half) >> bits
    d = x.man - (n << bits)
    lo, hi = d - x.rad, d + x.rad
    if lo < -half or hi > half:
        # straddles n +- 1/2, where the distance peaks at exactly 1/2
        tent = lambda v: min(abs(v), 2 * half - abs(v))
        a, b = min(tent(lo), tent(hi)), half
    elif lo >= 0:
        a, b = lo, hi
    elif hi <= 0:
        a, b = -hi, -lo
    else:
        a, b = 0, max(-lo, hi)
    man = (a + b) // 2
    return PrecisionReal(man, max(man - a, b - man), x.digits)
