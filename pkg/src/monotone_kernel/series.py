"""Power-series evaluation of the special functions used by the verification suites.

Every function here is a power series in a nonnegative real variable with
all-positive terms and a term ratio that decreases monotonically to zero, so a
single truncation rule covers them all: stop once the next term falls below
tol * partial_sum / 4 and the term ratio has dropped to 1/2 or less, then
report error_bound = 2 * (first omitted term).  From that point on the tail is
dominated by a geometric series with ratio 1/2, which makes the bound rigorous.

Values are carried as numpy longdouble (80-bit extended on x86-64, 64 mantissa
bits).  The cancellation-sensitive margins in the verify module budget for at
least 60 mantissa bits; a platform whose longdouble is plain double would not
clear that bar, hence the import-time check below.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

Real = np.longdouble

# Highest supported derivative order for e^(1/t).  The exact coefficients grow
# super-factorially; at n = 24 the largest magnitude is 45783921644565293629440000
# (about 4.6e25, < 2^86) so everything stays comfortably inside 128-bit integers.
N_MAX = 24

_MAX_TERMS = 20000

MANTISSA_BITS = np.finfo(Real).nmant + 1
if MANTISSA_BITS < 60:
    warnings.warn(
        "longdouble carries only %d mantissa bits on this platform; the error "
        "analysis assumes at least 60" % MANTISSA_BITS,
        RuntimeWarning,
    )

_EPS = Real(np.finfo(Real).eps)


class DomainError(ValueError):
    """An argument violated a documented precondition."""


# Exact integer factorials through 170!.  Series recurrences never index the
# table directly beyond their leading term, so this range is ample; _factorial
# extends multiplicatively in Real for anything larger.
_FACT = tuple(math.factorial(i) for i in range(171))


def _factorial(n: int) -> Real:
    if n < len(_FACT):
        return Real(_FACT[n])
    v = Real(_FACT[-1])
    for i in range(len(_FACT), n + 1):
        v = v * Real(i)
    return v


def _int_to_real(c: int) -> Real:
    # exact for |c| < 2^106; numpy may route large Python ints through float64
    if -(1 << 53) < c < (1 << 53):
        return Real(c)
    hi, lo = divmod(abs(c), 1 << 53)
    v = Real(hi) * Real(1 << 53) + Real(lo)
    return -v if c < 0 else v


def _require_int(name: str, v) -> int:
    if isinstance(v, bool) or (not isinstance(v, (int, np.integer)) and not float(v).is_integer()):
        raise DomainError("%s must be a nonnegative integer" % name)
    i = int(v)
    if i < 0:
        raise DomainError("%s must be a nonnegative integer" % name)
    return i


def _require_positive(name: str, v) -> Real:
    x = Real(v)
    if not np.isfinite(x) or x <= 0:
        raise DomainError("%s must be a positive finite real" % name)
    return x


def _require_nonneg(name: str, v) -> Real:
    x = Real(v)
    if not np.isfinite(x) or x < 0:
        raise DomainError("%s must be a nonnegative finite real" % name)
    return x


@dataclass(frozen=True)
class SeriesValue:
    """A truncated series sum with an absolute error bound.

    error_bound dominates the discarded tail whenever the stop rule fired with
    a term ratio at or below 1/2 (always the case here).  terms_used counts the
    terms actually accumulated.
    """

    value: Real
    error_bound: Real
    terms_used: int


@dataclass(frozen=True)
class DerivativeCoeffs:
    """Exact integer coefficients of R_n, where d^n/dt^n e^(1/t) = e^(1/t) R_n(t).

    coeffs maps the exponent j to c_j in R_n(t) = sum_j c_j t^(-j).  For n >= 1
    the exponents run from n+1 through 2n and every coefficient has sign (-1)^n.
    """

    order: int
    coeffs: Dict[int, int]


def shifted_factorial(a, n) -> Real:
    """Pochhammer symbol (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1."""
    n = _require_int("n", n)
    v = Real(1)
    x = Real(a)
    for i in range(n):
        v = v * (x + Real(i))
    return v


def _kernel_series(n: int, u: Real, tol: Real) -> SeriesValue:
    """sum_{j>=0} u^j / (j! (j+n)!), the series behind I_n(2 sqrt(u)) / u^(n/2).

    Term ratio u / ((j+1)(j+n+1)) decreases in j, so the geometric tail bound
    of the stop rule applies once the ratio reaches 1/2.
    """
    total = term = Real(1) / _factorial(n)
    terms = 1
    with np.errstate(over="raise"):
        try:
            while terms < _MAX_TERMS:
                nxt = term * u / (Real(terms) * Real(terms + n))
                if nxt < tol * total / 4 and u / (Real(terms + 1) * Real(terms + n + 1)) <= 0.5:
                    return SeriesValue(total, 2 * nxt, terms)
                total = total + nxt
                term = nxt
                terms += 1
        except FloatingPointError:
            pass
    raise DomainError(
        "argument is outside the series-convergent range "
        "(term count or magnitude exceeds the longdouble working range)"
    )


def bessel_i(n, z, tol=1e-15) -> SeriesValue:
    """Modified Bessel function of the first kind, integer order.

    I_n(z) = sum_{k>=0} (z/2)^(2k+n) / (k! (n+k)!), evaluated as
    (z/2)^n times the kernel series at u = (z/2)^2.  The reported error_bound
    is at most tol * max(1, value).
    """
    n = _require_int("n", n)
    z = _require_nonneg("z", z)
    tol = _require_positive("tol", tol)
    half = z / 2
    base = _kernel_series(n, half * half, tol)
    scale = half ** n
    return SeriesValue(scale * base.value, scale * base.error_bound, base.terms_used)


def bessel_kernel(u, tol=1e-15) -> SeriesValue:
    """I_1(2 sqrt(u)) / sqrt(u) evaluated as sum_{k>=0} u^k / (k! (k+1)!).

    The power-series form is regular at u = 0 (value 1) where the quotient
    form is 0/0, and it is the shape every integral representation needs.
    Always >= 1 for u >= 0.
    """
    u = _require_nonneg("u", u)
    tol = _require_positive("tol", tol)
    return _kernel_series(1, u, tol)


def hyper_1f2(k, t, tol=1e-15) -> SeriesValue:
    """1F2(1; k+1, k+2; t) = sum_{n>=0} [(1)_n / ((k+1)_n (k+2)_n)] t^n / n!.

    All terms positive, so value >= 1; relative truncation error <= tol.
    Term ratio t / ((k+1+n)(k+2+n)) decreases in n.
    """
    k = _require_int("k", k)
    t = _require_nonneg("t", t)
    tol = _require_positive("tol", tol)
    total = term = Real(1)
    terms = 1
    with np.errstate(over="raise"):
        try:
            while terms < _MAX_TERMS:
                nxt = term * t / (Real(k + terms) * Real(k + terms + 1))
                if nxt < tol * total / 4 and t / (Real(k + terms + 1) * Real(k + terms + 2)) <= 0.5:
                    return SeriesValue(total, 2 * nxt, terms)
                total = total + nxt
                term = nxt
                terms += 1
        except FloatingPointError:
            pass
    raise DomainError(
        "argument is outside the series-convergent range "
        "(term count or magnitude exceeds the longdouble working range)"
    )


def exp_tail_h(k, z) -> Real:
    """H_k(z) = e^(1/z) - sum_{m=0}^{k} z^(-m) / m!, for z > 0.

    Computed as the tail series sum_{m>k} z^(-m) / m!, which is all-positive
    and free of the catastrophic cancellation the subtractive form suffers at
    large z (about 20 lost digits at z = 1e6 with k = 0).  The result is
    accurate to machine precision relative and strictly positive.
    """
    k = _require_int("k", k)
    z = _require_positive("z", z)
    x = 1 / z
    with np.errstate(over="raise"):
        try:
            total = term = x ** (k + 1) / _factorial(k + 1)
            m = k + 1
            while m - k < _MAX_TERMS:
                nxt = term * x / Real(m + 1)
                total = total + nxt
                term = nxt
                m += 1
                if nxt < _EPS * total / 4 and x / Real(m + 1) <= 0.5:
                    return total
        except FloatingPointError:
            pass
    raise DomainError(
        "z is outside the series-convergent range "
        "(e^(1/z) exceeds the longdouble working range)"
    )


def q_family(u) -> Tuple[Real, Real, Real, Real]:
    """(Q, Q', Q'', Q''') for Q(u) = e^u (12 - 6u + u^2) - 12 - 6u - u^2.

    Closed forms: Q'(u) = e^u (u^2 - 4u + 6) - 2(u + 3),
    Q''(u) = e^u (u^2 - 2u + 2) - 2, Q'''(u) = u^2 e^u.  Below u = 1/4 the
    closed forms of Q, Q', Q'' cancel to orders u^5, u^4, u^3, so there all
    three are summed as the identical positive series
    sum_{m>=5} (m-3)(m-4) u^(m-k) / (m-k)!  (k = 0, 1, 2; leading terms
    u^5/60, u^4/12, u^3/3).  Q''' never cancels.
    """
    u = _require_nonneg("u", u)
    eu = np.exp(u)
    q3 = u * u * eu
    if u == 0:
        return Real(0), Real(0), Real(0), Real(0)
    if u < 0.25:
        p0 = u ** 5 / Real(_FACT[5])
        p1 = u ** 4 / Real(_FACT[4])
        p2 = u ** 3 / Real(_FACT[3])
        q0 = 2 * p0
        q1 = 2 * p1
        q2 = 2 * p2
        for m in range(5, 60):
            p0 = p0 * u / Real(m + 1)
            p1 = p1 * u / Real(m)
            p2 = p2 * u / Real(m - 1)
            a = Real((m - 2) * (m - 3))
            q0 += a * p0
            q1 += a * p1
            q2 += a * p2
            # q2 has the largest term ratio u/(m-1); once it settles, all do
            if a * p2 < _EPS * q2 / 4:
                break
    else:
        q0 = eu * (12 - 6 * u + u * u) - 12 - 6 * u - u * u
        q1 = eu * (u * u - 4 * u + 6) - 2 * (u + 3)
        q2 = eu * (u * u - 2 * u + 2) - 2
    return q0, q1, q2, q3


_DERIV_COEFFS = [{0: 1}]


def exp_inv_derivative_coeffs(n) -> DerivativeCoeffs:
    """Exact coefficients of the n-th derivative of e^(1/t).

    Differentiating e^(1/t) t^(-j) sends the coefficient c at exponent j to
    -j c at exponent j+1 (power rule) and -c at exponent j+2 (chain rule), so
    all coefficients of R_n share the sign (-1)^n and the exponents run from
    n+1 to 2n with |c_{2n}| = 1.
    """
    n = _require_int("n", n)
    if n > N_MAX:
        raise DomainError("n must not exceed N_MAX = %d (exact-coefficient overflow guard)" % N_MAX)
    while len(_DERIV_COEFFS) <= n:
        prev = _DERIV_COEFFS[-1]
        nxt: Dict[int, int] = {}
        for j, c in prev.items():
            nxt[j + 1] = nxt.get(j + 1, 0) - j * c
            nxt[j + 2] = nxt.get(j + 2, 0) - c
        _DERIV_COEFFS.append({j: c for j, c in nxt.items() if c != 0})
    return DerivativeCoeffs(n, dict(_DERIV_COEFFS[n]))


def exp_inv_derivative(n, t) -> Real:
    """d^n/dt^n e^(1/t) at t > 0, via the exact coefficient table.

    All coefficients of R_n share one sign, so the sum below has no
    cancellation.
    """
    t = _require_positive("t", t)
    dc = exp_inv_derivative_coeffs(n)
    x = 1 / t
    s = Real(0)
    for j in sorted(dc.coeffs):
        s = s + _int_to_real(dc.coeffs[j]) * x ** j
    return np.exp(x) * s
