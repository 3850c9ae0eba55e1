"""Adaptive Gauss-Kronrod Laplace quadrature: rule exactness, error honesty.

The embedded 7/15 rule is stored to 25 digits; its defining property (Kronrod
extension exact through degree 22, Gauss part through 13) is asserted here
directly, including the expected first failures at degrees 24 and 14.
"""
import math

import numpy as np
import pytest

from monotone_kernel.quadrature import (
    MAX_PANELS,
    IntegrandSpec,
    QuadratureError,
    QuadratureValue,
    laplace_integral,
    _GIDX,
    _NODES,
    _WG,
    _WK,
)
from monotone_kernel.series import DomainError, Real

GROWTH_ORACLE = Real("9.878186033256132008199711")  # int e^(2 sqrt u) e^(-u) du


def _moment(nodes, weights, d):
    return float(np.sum(weights * nodes**d))


@pytest.mark.parametrize("d", range(0, 23))
def test_kronrod_exact_through_degree_22(d):
    exact = 2.0 / (d + 1) if d % 2 == 0 else 0.0
    got = _moment(_NODES, _WK, d)
    assert abs(got - exact) < 3e-18


def test_kronrod_fails_at_degree_24():
    assert abs(_moment(_NODES, _WK, 24) - 2.0 / 25) > 1e-10


@pytest.mark.parametrize("d", range(0, 14))
def test_gauss_exact_through_degree_13(d):
    exact = 2.0 / (d + 1) if d % 2 == 0 else 0.0
    got = _moment(_NODES[_GIDX], _WG, d)
    assert abs(got - exact) < 3e-18


def test_gauss_fails_at_degree_14():
    assert abs(_moment(_NODES[_GIDX], _WG, 14) - 2.0 / 15) > 1e-5


def test_gauss_center_weight_is_rational():
    # the 7-point Gauss-Legendre center weight is exactly 512/1225
    center = _WG[np.argmin(np.abs(_NODES[_GIDX]))]
    assert abs(float(center - Real(512) / Real(1225))) < 1e-24


@pytest.mark.parametrize("p", range(0, 7))
@pytest.mark.parametrize("t", [0.5, 2.0, 10.0])
def test_polynomial_moments(p, t):
    spec = IntegrandSpec(
        evaluator=lambda u, p=p: u**Real(p) if p else np.ones_like(u),
        growth_envelope=(1.0, 0.0, float(p)),
    )
    qv = laplace_integral(spec, t, 1e-13)
    exact = Real(math.factorial(p)) / Real(t) ** (p + 1)
    err = abs(float(qv.value - exact))
    assert err <= float(qv.error_estimate)
    assert float(qv.error_estimate) <= 1e-13 * max(1.0, abs(float(qv.value)))
    assert qv.evaluations % 15 == 0 and qv.evaluations > 0


def test_sqrt_exponential_growth_envelope():
    spec = IntegrandSpec(
        evaluator=lambda u: np.exp(2 * np.sqrt(u)),
        growth_envelope=(1.0, 2.0, 0.0),
    )
    qv = laplace_integral(spec, 1.0, 1e-13)
    assert abs(float(qv.value - GROWTH_ORACLE)) <= float(qv.error_estimate)
    assert float(qv.error_estimate) <= 1e-13 * max(1.0, abs(float(qv.value)))


def test_deterministic():
    spec = IntegrandSpec(
        evaluator=lambda u: np.exp(np.sqrt(u)) / (1 + u),
        growth_envelope=(1.0, 1.0, 0.0),
    )
    a = laplace_integral(spec, 1.5, 1e-11)
    b = laplace_integral(spec, 1.5, 1e-11)
    assert a.value == b.value
    assert a.error_estimate == b.error_estimate
    assert a.evaluations == b.evaluations


def test_envelope_violation_detected():
    spec = IntegrandSpec(
        evaluator=lambda u: np.exp(u),
        growth_envelope=(1.0, 0.0, 0.0),
    )
    with pytest.raises(ValueError, match="envelope"):
        laplace_integral(spec, 1.0, 1e-10)


def test_nonpositive_rate_is_tail_unbounded():
    spec = IntegrandSpec(evaluator=lambda u: np.ones_like(u), growth_envelope=(1.0, 0.0, 0.0))
    for t in (0.0, -1.0):
        with pytest.raises(QuadratureError) as exc:
            laplace_integral(spec, t, 1e-10)
        assert exc.value.reason == "tail-unbounded"


def test_unreachable_tolerance_hits_subdivision_cap():
    spec = IntegrandSpec(evaluator=lambda u: 1 / (1 + u), growth_envelope=(1.0, 0.0, 0.0))
    with pytest.raises(QuadratureError) as exc:
        laplace_integral(spec, 1.0, 1e-26)
    assert exc.value.reason == "max-subdivision"


def test_invalid_config_rejected():
    good = lambda u: np.ones_like(u)
    with pytest.raises(DomainError):
        laplace_integral(IntegrandSpec(good, (0.0, 0.0, 0.0)), 1.0, 1e-10)  # C <= 0
    with pytest.raises(DomainError):
        laplace_integral(IntegrandSpec(good, (1.0, -1.0, 0.0)), 1.0, 1e-10)  # alpha < 0
    with pytest.raises(DomainError):
        laplace_integral(IntegrandSpec(good, (1.0, 0.0, -2.0)), 1.0, 1e-10)  # p < 0
    with pytest.raises(DomainError):
        laplace_integral(IntegrandSpec(good, (1.0, 0.0, 0.0)), 1.0, 0.0)  # tol <= 0
