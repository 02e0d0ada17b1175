import math
from fractions import Fraction

import mpmath
import pytest

from perrin_repdigits.contfrac import (
    ContinuedFraction,
    InsufficientExpansion,
    a_max,
    expand,
    legendre_lower_bound,
    tau,
    tau_expansion,
)
from perrin_repdigits.realfield import PrecisionExhausted, PrecisionReal, sqrt_certified

M = 6 * 10**47
Q106 = 21695574963444524513646677911090250505443859600601
P106 = 177652856036642165557187989663314255133456297895465
KNOWN_PREFIX = [8, 5, 3, 3, 1, 5, 1, 8, 4, 6, 1, 4, 1, 1, 1, 9, 1, 4, 4, 9, 1, 5, 1, 1, 1, 5, 1, 1, 1, 2, 1, 4]


@pytest.fixture(scope="module")
def cf():
    return tau_expansion(6 * M, 12, 256)


def test_first_ten_quotients():
    assert list(expand(tau, count=10).quotients) == [8, 5, 3, 3, 1, 5, 1, 8, 4, 6]


def test_known_prefix(cf):
    assert list(cf.quotients[: len(KNOWN_PREFIX)]) == KNOWN_PREFIX


def test_quotients_against_mpmath():
    mpmath.mp.dps = 400
    a = mpmath.log(10) / mpmath.log(mpmath.findroot(lambda x: x**3 - x - 1, 1.3247))
    expected = []
    for _ in range(150):
        k = int(mpmath.floor(a))
        expected.append(k)
        a = 1 / (a - k)
    assert list(expand(tau, count=150).quotients) == expected


def test_first_q_above_6m(cf):
    k = cf.first_index_above(6 * M)
    assert cf.q(k) == Q106
    assert cf.p(k) == P106
    # q_106 when counting from 1
    assert k == 105
    assert cf.q(k - 1) <= 6 * M


def test_determinant_identity(cf):
    for k in range(1, len(cf)):
        assert cf.p(k) * cf.q(k - 1) - cf.p(k - 1) * cf.q(k) == (-1) ** (k - 1)


def test_convergents_coprime_and_increasing(cf):
    assert all(math.gcd(p, q) == 1 for p, q in cf.convergents)
    qs = [q for _, q in cf.convergents]
    assert all(a < b for a, b in zip(qs[1:], qs[2:]))


def test_convergent_quality(cf):
    t = tau(400)
    for k in range(len(cf) - 1):
        p, q = cf.convergents[k]
        assert abs(t - Fraction(p, q)) < Fraction(1, q * cf.q(k + 1))


def test_precision_stability():
    a = expand(tau, count=60, precision=80)
    b = expand(tau, count=60, precision=300)
    assert a.quotients == b.quotients


def test_rational_input():
    cf = expand(Fraction(1, 2), count=2)
    assert list(cf.quotients) == [0, 2]
    assert a_max(cf, 1) == 2


def test_rational_expansion_terminates():
    cf = expand(Fraction(355, 113), count=10)
    assert list(cf.quotients) == [3, 7, 16]
    assert cf.convergents[-1] == (355, 113)


def test_fixed_enclosure_too_wide():
    x = PrecisionReal.from_interval(Fraction(1414, 1000), Fraction(1415, 1000), 10)
    with pytest.raises(PrecisionExhausted):
        expand(x, count=20)


def test_golden_ratio():
    phi = lambda d: (1 + sqrt_certified(PrecisionReal.exact(5, d))) / 2
    cf = expand(phi, count=30)
    assert set(cf.quotients) == {1}
    fib = [1, 1]
    while len(fib) < 30:
        fib.append(fib[-1] + fib[-2])
    assert [q for _, q in cf.convergents] == fib
    assert legendre_lower_bound(cf, 100, 7) == Fraction(1, 3 * 49)


def test_a_max(cf):
    assert a_max(cf, M) == 564
    assert a_max(expand(tau, count=5), 10) == 8


def test_legendre_bound_generic(cf):
    assert legendre_lower_bound(cf, M, 12345) == Fraction(1, 566 * 12345**2)
    with pytest.raises(ValueError):
        legendre_lower_bound(cf, M, 0)


def test_legendre_bound_brute_force():
    # every x/y with y < 500 keeps the distance the bound promises
    t = Fraction(mpmath.nstr(mpmath.log(10) / mpmath.log(mpmath.findroot(lambda x: x**3 - x - 1, 1.3)), 30))
    cf = expand(t, count=12)
    for y in range(1, 500):
        x = round(t * y)
        assert abs(t - Fraction(x, y)) >= legendre_lower_bound(cf, 500, y)


def test_lookup_past_end(cf):
    with pytest.raises(InsufficientExpansion):
        cf.first_index_above(10**200)
