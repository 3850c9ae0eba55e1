"""Trigamma and higher polygamma functions on the positive half line.

psi^(m)(t) = (-1)^(m+1) m! sum_{n>=0} (t+n)^(-(m+1)) for m >= 1.  Evaluation
shifts the argument upward with the exact single-term recurrence

    psi^(m)(t) = psi^(m)(t+1) + (-1)^(m+1) m! t^(-(m+1))

until the Euler-Maclaurin asymptotic series with Bernoulli numbers B_2..B_20
is accurate to 1e-14 relative (first-omitted-term bound, using B_22), then
sums the asymptotic form.  Both the shifted partial sum and the asymptotic
leading terms are positive, so the magnitude accumulates without cancellation
and the sign (-1)^(m+1) is applied once at the end.

The integral path psi^(m)(t) = (-1)^(m+1) integral_0^inf u^m e^(-tu)/(1-e^(-u)) du
goes through the quadrature module and serves as an independent cross-check.
The factor u/(1-e^(-u)) is evaluated by its Bernoulli power series below
u = 1/2, where forming 1 - e^(-u) directly would lose digits.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict

import numpy as np

from .quadrature import IntegrandSpec, QuadratureValue, laplace_integral
from .series import (
    DomainError,
    N_MAX,
    Real,
    _FACT,
    _int_to_real,
    _require_int,
    _require_nonneg,
    _require_positive,
)

# Even-index Bernoulli numbers as exact rationals; odd indices beyond 1 vanish
# and are deliberately absent.
BERNOULLI: Dict[int, Fraction] = {
    2: Fraction(1, 6),
    4: Fraction(-1, 30),
    6: Fraction(1, 42),
    8: Fraction(-1, 30),
    10: Fraction(5, 66),
    12: Fraction(-691, 2730),
    14: Fraction(7, 6),
    16: Fraction(-3617, 510),
    18: Fraction(43867, 798),
    20: Fraction(-174611, 330),
}

# B_22, used only to bound the first omitted asymptotic term
_B22 = Fraction(854513, 138)

M_MAX = N_MAX + 1


def _fraction_to_real(f: Fraction) -> Real:
    return _int_to_real(f.numerator) / _int_to_real(f.denominator)


# Coefficients b_k of u/(1 - e^(-u)) = 1 + u/2 + sum_{j>=1} B_2j u^(2j) / (2j)!
# (radius 2 pi; with b_0..b_20 the truncation error below u = 1/2 is ~1e-24).
def _build_bf():
    cs = [Fraction(1), Fraction(1, 2)] + [Fraction(0)] * 19
    for k in range(1, 11):
        cs[2 * k] = BERNOULLI[2 * k] / math.factorial(2 * k)
    return np.array([_fraction_to_real(c) for c in cs], dtype=Real)


BERN_FACTOR_COEFFS = _build_bf()


def bern_factor(u) -> Real:
    """u / (1 - e^(-u)) for a scalar u >= 0; series below 1/2, closed form above."""
    u = _require_nonneg("u", u)
    if u < 0.5:
        acc = Real(0)
        for c in BERN_FACTOR_COEFFS[::-1]:
            acc = acc * u + c
        return acc
    return u / (-np.expm1(-u))


def _bern_factor_array(u: np.ndarray) -> np.ndarray:
    out = np.empty_like(u)
    small = u < 0.5
    if small.any():
        us = u[small]
        acc = np.zeros_like(us)
        for c in BERN_FACTOR_COEFFS[::-1]:
            acc = acc * us + c
        out[small] = acc
    big = ~small
    if big.any():
        ub = u[big]
        out[big] = ub / (-np.expm1(-ub))
    return out


_ASYM_COEFFS: Dict[int, np.ndarray] = {}
_T_ASYM: Dict[int, int] = {}


def _t_asym(m: int) -> int:
    # smallest T >= 20 with |B_22| (m+21)! / ((m-1)! 22! T^22) <= 1e-14,
    # i.e. first omitted asymptotic term <= 1e-14 of the leading term
    if m not in _T_ASYM:
        num = float(_B22) * math.factorial(m + 21) / (math.factorial(m - 1) * math.factorial(22))
        _T_ASYM[m] = max(20, int(math.ceil((num * 1e14) ** (1.0 / 22.0))))
    return _T_ASYM[m]


def _asym_coeffs(m: int) -> np.ndarray:
    if m not in _ASYM_COEFFS:
        cs = []
        for k in range(1, 11):
            f = BERNOULLI[2 * k] * math.factorial(2 * k + m - 1) / math.factorial(2 * k)
            cs.append(_fraction_to_real(f))
        _ASYM_COEFFS[m] = np.array(cs, dtype=Real)
    return _ASYM_COEFFS[m]


def _asym_magnitude(m: int, T: Real) -> Real:
    # |psi^(m)(T)| = (m-1)!/T^m + m!/(2 T^(m+1)) + sum_k B_2k (2k+m-1)!/((2k)! T^(2k+m))
    x = 1 / T
    s = Real(_FACT[m - 1]) * x ** m + Real(_FACT[m]) / 2 * x ** (m + 1)
    x2 = x * x
    pw = x ** (m + 2)
    for c in _asym_coeffs(m):
        s = s + c * pw
        pw = pw * x2
    return s


def polygamma(m, t) -> Real:
    """psi^(m)(t) for m in 1..M_MAX and t > 0, relative accuracy ~1e-12 or better.

    The defining sum has fixed sign (-1)^(m+1); everything is accumulated as a
    positive magnitude and signed once.
    """
    m = _require_int("m", m)
    if not 1 <= m <= M_MAX:
        raise DomainError("m must satisfy 1 <= m <= %d" % M_MAX)
    t = _require_positive("t", t)
    target = _t_asym(m)
    shift = Real(0)
    while t < target:
        shift = shift + t ** Real(-(m + 1))
        t = t + 1
    mag = Real(_FACT[m]) * shift + _asym_magnitude(m, t)
    return mag if m % 2 == 1 else -mag


def trigamma(t) -> Real:
    """psi'(t) = sum_{n>=0} (t+n)^(-2); alias for polygamma(1, t)."""
    return polygamma(1, t)


def polygamma_integral(m, t, tol=1e-10) -> QuadratureValue:
    """psi^(m)(t) via (-1)^(m+1) integral_0^inf u^m e^(-tu) / (1 - e^(-u)) du.

    The integrand is u^(m-1) times u/(1-e^(-u)), which is finite at 0+ (limit 1
    for m = 1, limit 0 above).  Envelope: u/(1-e^(-u)) <= 1 + u because
    (1+u) e^(-u) <= 1, so u^m/(1-e^(-u)) <= (1+u)^m.
    """
    m = _require_int("m", m)
    if not 1 <= m <= M_MAX:
        raise DomainError("m must satisfy 1 <= m <= %d" % M_MAX)
    t = _require_positive("t", t)

    def g(u, mm=m):
        return u ** (mm - 1) * _bern_factor_array(u)

    qv = laplace_integral(IntegrandSpec(g, (1.0, 0.0, float(m))), t, tol)
    if m % 2 == 0:
        return QuadratureValue(-qv.value, qv.error_estimate, qv.evaluations)
    return qv
