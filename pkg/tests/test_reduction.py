import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import assume, example, given, settings, strategies as st

from perrin_repdigits.contfrac import expand
from perrin_repdigits.realfield import PrecisionReal, sqrt_certified
from perrin_repdigits.reduction import (
    EpsilonNotPositive,
    HypothesisViolated,
    ReductionProblem,
    dujella_petho,
    guzman_luca,
    legendre_reduce,
)

DIGITS = 60


def root(n, digits=DIGITS):
    return sqrt_certified(PrecisionReal.exact(n, digits))


def worst_exponent(kappa, mu, M, A, B):
    """max k over 1 <= m <= M with 0 < |m kappa - n + mu| < A B^-k, by enumeration."""
    best = -math.inf
    for m in range(1, M + 1):
        x = m * kappa + mu
        n = mpmath.nint(x)
        lam = abs(x - n)
        if lam == 0:
            continue
        best = max(best, int(mpmath.floor(mpmath.log(A / lam) / mpmath.log(B) - mpmath.mpf(10) ** -30)))
    return best


def test_dujella_petho_sqrt2():
    kappa = root(2)
    cf = expand(kappa, count=40)
    prob = ReductionProblem(kappa, PrecisionReal.exact(Fraction(1, 3), DIGITS), 1000,
                            PrecisionReal.exact(10, DIGITS), PrecisionReal.exact(10, DIGITS))
    out = dujella_petho(prob, cf)
    assert out.q_used > 6000
    assert out.epsilon.is_positive()
    mpmath.mp.dps = 50
    assert worst_exponent(mpmath.sqrt(2), mpmath.mpf(1) / 3, 1000, 10, 10) <= out.k_bound


@settings(max_examples=25, deadline=None)
@given(
    st.sampled_from([2, 3, 5, 6, 7, 10, 11, 13]),
    st.fractions(min_value=Fraction(1, 50), max_value=Fraction(49, 50), max_denominator=50),
    st.integers(min_value=10, max_value=1000),
    st.integers(min_value=1, max_value=50),
    st.integers(min_value=2, max_value=10),
)
@example(6, Fraction(37, 38), 327, 1, 2)  # mu q lands exactly on a half-integer
def test_dujella_petho_soundness(n, mu, M, A, B):
    kappa = root(n)
    cf = expand(lambda d: root(n, d), count=40, precision=DIGITS)
    prob = ReductionProblem(kappa, PrecisionReal.exact(mu, DIGITS), M,
                            PrecisionReal.exact(A, DIGITS), PrecisionReal.exact(B, DIGITS))
    try:
        out = dujella_petho(prob, cf)
    except EpsilonNotPositive:
        assume(False)
    mpmath.mp.dps = 50
    mu_mp = mpmath.mpf(mu.numerator) / mu.denominator
    assert worst_exponent(mpmath.sqrt(n), mu_mp, M, A, B) <= out.k_bound


def test_dujella_petho_gives_up_on_lattice_points():
    # mu = 0 makes ||mu q|| = 0, so epsilon is never positive
    kappa = root(2)
    prob = ReductionProblem(kappa, PrecisionReal.exact(0, DIGITS), 100,
                            PrecisionReal.exact(1, DIGITS), PrecisionReal.exact(2, DIGITS))
    with pytest.raises(EpsilonNotPositive):
        dujella_petho(prob, expand(kappa, count=40))


def test_problem_hypotheses():
    one = PrecisionReal.exact(1, DIGITS)
    with pytest.raises(HypothesisViolated):
        ReductionProblem(one, one, 100, one, one)
    with pytest.raises(HypothesisViolated):
        ReductionProblem(one, one, 100, PrecisionReal.exact(0, DIGITS), PrecisionReal.exact(2, DIGITS))


def test_legendre_sqrt2():
    kappa = root(2)
    cf = expand(kappa, count=30)
    out = legendre_reduce(kappa, cf, 100, 1, 2)
    assert out.a_max == 2
    assert out.k_bound == 8
    # brute force: |sqrt2 - x/y| < 1 / (2^k y) over y < 100
    mpmath.mp.dps = 50
    s = mpmath.sqrt(2)
    worst = max(
        int(mpmath.floor(mpmath.log(1 / (y * abs(s - mpmath.nint(s * y) / y)), 2)))
        for y in range(1, 100)
    )
    assert worst <= out.k_bound


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([3, 5, 7, 19, 31, 43]), st.integers(min_value=10, max_value=1000),
       st.integers(min_value=1, max_value=20), st.integers(min_value=2, max_value=5))
def test_legendre_soundness(n, M, A, B):
    kappa = root(n)
    cf = expand(lambda d: root(n, d), count=40, precision=DIGITS)
    out = legendre_reduce(kappa, cf, M, A, B)
    mpmath.mp.dps = 50
    s = mpmath.sqrt(n)
    worst = max(
        int(mpmath.floor(mpmath.log(A / (y * abs(s - mpmath.nint(s * y) / y)), B) - mpmath.mpf(10) ** -30))
        for y in range(1, M)
    )
    assert worst <= out.k_bound


def test_legendre_rejects_foreign_expansion():
    with pytest.raises(ValueError):
        legendre_reduce(root(2), expand(root(3), count=30), 100, 1, 2)


def test_guzman_luca_examples():
    b = guzman_luca(2, PrecisionReal.exact(Fraction("1.10e44")))
    assert b < Fraction("4.6e48")
    b = guzman_luca(1, PrecisionReal.exact(100))
    assert abs(float(b) - 200 * math.log(100)) < 1e-9
    assert abs(float(b) - 921.0) < 0.1
    with pytest.raises(HypothesisViolated):
        guzman_luca(2, PrecisionReal.exact(256))


def test_guzman_luca_soundness_r1():
    # every L with L / log L < 100 lies below the bound
    b = float(guzman_luca(1, PrecisionReal.exact(100)))
    worst = max(L for L in range(3, 5000) if L / math.log(L) < 100)
    assert worst < b
    assert 500 / math.log(500) < 100


def test_guzman_luca_one_plus_log_reading():
    H = 10**6
    b = float(guzman_luca(2, PrecisionReal.exact(H), "one_plus_log"))
    worst = max(L for L in range(1, 10**8, 997) if L / (1 + math.log(L)) ** 2 < H)
    assert worst < b
    assert guzman_luca(2, PrecisionReal.exact(H), "log") < Fraction(b)


def test_guzman_luca_monotone():
    vals = [guzman_luca(2, PrecisionReal.exact(h)) for h in (300, 10**4, 10**8, 10**20)]
    assert all(a < b for a, b in zip(vals, vals[1:]))
