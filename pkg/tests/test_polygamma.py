"""Polygamma evaluation: reference values, recurrence exactness, integral path.

References computed with an independent 40-digit evaluation of psi^(m).
"""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monotone_kernel.polygamma import (
    BERNOULLI,
    M_MAX,
    bern_factor,
    polygamma,
    polygamma_integral,
    trigamma,
)
from monotone_kernel.quadrature import QuadratureError
from monotone_kernel.series import DomainError, Real

R = Real

REFS = [
    (1, 1.0, R("1.644934066848226436472415")),        # pi^2/6
    (1, 2.0, R("0.6449340668482264364724152")),
    (1, 0.1, R("101.433299150792747704652")),
    (2, 1.0, R("-2.404113806319188570799476")),       # -2 zeta(3)
    (3, 1.0, R("6.493939402266829149096022")),        # pi^4/15
    (5, 0.3, R("164634.8460992230364336655")),
    (10, 2.7, R("-67.4850452621964431644692")),
    (25, 0.5, R("1.040939685273742764035655e+33")),
    (24, 3.0, R("-732828332694.6454946357634")),
    (1, 1e4, R("0.0001000050001666666663333333")),
]


def rel(a, b) -> float:
    b = R(b)
    return float(abs((R(a) - b) / b))


@pytest.mark.parametrize("m,t,ref", REFS)
def test_reference_values(m, t, ref):
    assert rel(polygamma(m, t), ref) < 2e-18


def test_trigamma_is_order_one():
    assert trigamma(2.0) == polygamma(1, 2.0)


@settings(deadline=None, max_examples=80)
@given(
    m=st.integers(min_value=1, max_value=M_MAX),
    t=st.floats(min_value=0.05, max_value=50.0),
)
def test_recurrence_exact(m, t):
    # psi^(m)(t) - psi^(m)(t+1) = (-1)^(m+1) m! t^(-m-1); both sides share the
    # same asymptotic start, so the residual is per-eval rounding amplified by
    # the cancellation ratio |psi^(m)(t)| / |m! t^(-m-1)| (up to ~t for m=1)
    a = polygamma(m, t)
    b = polygamma(m, R(t) + 1)
    fact = Real(1)
    for i in range(2, m + 1):
        fact *= Real(i)
    rhs = (-1) ** (m + 1) * fact * R(t) ** (-(m + 1))
    amp = float(abs(a / rhs))
    # when t itself clears the asymptotic threshold the two sides use
    # different expansion points, so each carries its own <=1e-14-budget
    # truncation; below the threshold they share one and only rounding is left
    assert rel(a - b, rhs) < amp * 2e-14 + 5e-17


@pytest.mark.parametrize("m,t", [(1, 7.3), (5, 7.3), (13, 2.4), (25, 0.3)])
def test_recurrence_sharp_below_threshold(m, t):
    # both evaluations shift to the same expansion point: rounding-level only
    a = polygamma(m, t)
    b = polygamma(m, R(t) + 1)
    fact = Real(1)
    for i in range(2, m + 1):
        fact *= Real(i)
    rhs = (-1) ** (m + 1) * fact * R(t) ** (-(m + 1))
    amp = float(abs(a / rhs))
    assert rel(a - b, rhs) < 64 * 1.1e-19 * amp + 1e-17


@settings(deadline=None, max_examples=60)
@given(
    m=st.integers(min_value=1, max_value=M_MAX),
    t=st.floats(min_value=0.05, max_value=200.0),
)
def test_sign_alternates(m, t):
    v = polygamma(m, t)
    assert (v > 0) == (m % 2 == 1)


def test_bernoulli_table_spot():
    from fractions import Fraction

    assert BERNOULLI[2] == Fraction(1, 6)
    assert BERNOULLI[10] == Fraction(5, 66)
    assert BERNOULLI[20] == Fraction(-174611, 330)


def test_bern_factor_values_and_branches():
    assert bern_factor(0.0) == 1
    # series branch vs closed form straddling the 1/2 switch
    lo = bern_factor(0.5 - 1e-12)
    hi = bern_factor(0.5 + 1e-12)
    assert rel(lo, hi) < 1e-11
    # closed form at a series-branch point, cancellation-tolerant comparison
    u = R(0.25)
    assert rel(bern_factor(0.25), u / (-np.expm1(-u))) < 1e-17
    assert bern_factor(3.0) == R(3) / (-np.expm1(R(-3)))


def test_bern_factor_rejects_negative():
    with pytest.raises(DomainError):
        bern_factor(-0.1)


@pytest.mark.parametrize("m,t", [(1, 0.7), (1, 2.0), (2, 2.0), (3, 10.0), (5, 0.7)])
def test_integral_path_matches_direct(m, t):
    qv = polygamma_integral(m, t, tol=1e-10)
    direct = polygamma(m, t)
    assert abs(float(qv.value - direct)) <= 2e-10 * max(1.0, abs(float(direct)))
    assert abs(float(qv.value - direct)) <= float(qv.error_estimate) + 1e-17 * abs(float(direct))


def test_integral_path_error_estimate_scales():
    qv = polygamma_integral(2, 1.0, tol=1e-8)
    assert float(qv.error_estimate) <= 1e-8 * max(1.0, abs(float(qv.value)))


def test_domain_errors():
    with pytest.raises(DomainError):
        polygamma(0, 1.0)
    with pytest.raises(DomainError):
        polygamma(M_MAX + 1, 1.0)
    with pytest.raises(DomainError):
        polygamma(1, 0.0)
    with pytest.raises(DomainError):
        polygamma(1, -2.0)
    with pytest.raises(DomainError):
        polygamma(1.5, 1.0)
    with pytest.raises(DomainError):
        polygamma_integral(0, 1.0)
    with pytest.raises((DomainError, QuadratureError)):
        polygamma_integral(1, 0.0)
