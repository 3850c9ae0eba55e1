"""Verification suites for h(t) = e^(1/t) - psi'(t) and its kernel.

Every claim under test is recast as a per-point margin oriented so that the
claim is margin > 0:

    ineq1            e^(1/t) - 1 - psi'(t) > 0
    thm13            I_1(t) - (t/2)^3 / (1 - e^(-(t/2)^2)) > 0
    polybound        1 + u/2 + u^2/12 - u/(1 - e^(-u)) >= 0
    kernel_pos       I_1(2 sqrt u)/sqrt u - u/(1 - e^(-u)) > 0
    cm_direct        (-1)^k h^(k)(t) > 0 via exact derivative coefficients
    cm_laplace       same values through the Laplace transform of the kernel,
                     required to agree with cm_direct to relative tol
    representations  H_k(z) reconstructed from both integral representations
    limit            h(t) -> 1 with rate (h(t)-1) 24 t^4 -> 1

Margins that are themselves differences of nearly equal quantities are never
formed by direct subtraction.  Each such case has a dedicated merged power
series whose coefficients are assembled exactly (as rationals) at import:
the kernel difference below u = 1/2 (leading term u^3/144), the polynomial
bound margin below u = 1/2 (leading term u^4/720), and h(t) - 1 for t >= 20
(leading term 1/(24 t^4)).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

import numpy as np

from .polygamma import BERNOULLI, _bern_factor_array, _fraction_to_real, bern_factor, polygamma, trigamma
from .quadrature import IntegrandSpec, QuadratureError, laplace_integral
from .series import (
    DomainError,
    N_MAX,
    Real,
    _FACT,
    _int_to_real,
    _require_int,
    _require_positive,
    bessel_i,
    bessel_kernel,
    exp_inv_derivative,
    exp_tail_h,
)

_SPACINGS = {"log": "log", "lin": "linear", "linear": "linear"}


class Grid:
    """Strictly increasing grid of count points on [lo, hi], all positive."""

    __slots__ = ("lo", "hi", "count", "spacing", "points")

    def __init__(self, lo, hi, count, spacing="log"):
        if spacing not in _SPACINGS:
            raise DomainError("spacing must be one of log, lin, linear")
        self.spacing = _SPACINGS[spacing]
        lo = float(lo)
        hi = float(hi)
        if not (math.isfinite(lo) and math.isfinite(hi) and 0 < lo < hi):
            raise DomainError("grid bounds must satisfy 0 < lo < hi")
        count = _require_int("count", count)
        if count < 2:
            raise DomainError("count must be at least 2")
        self.lo, self.hi, self.count = lo, hi, count
        if self.spacing == "log":
            pts = np.exp(np.linspace(np.log(Real(lo)), np.log(Real(hi)), count, dtype=Real))
        else:
            pts = np.linspace(Real(lo), Real(hi), count, dtype=Real)
        pts[0] = Real(lo)
        pts[-1] = Real(hi)
        if not (np.diff(pts) > 0).all():
            raise DomainError("grid is too dense to be strictly increasing")
        self.points = pts


@dataclass(frozen=True)
class CheckEntry:
    t: Real
    k: Optional[int]
    lhs: Real
    rhs: Real
    margin: Real


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one suite: per-point margins and the pass verdict.

    passed is true iff every margin exceeds the suite threshold (0 everywhere
    except polybound, which allows -1e-14 for its limiting equality at 0+).
    """

    suite_id: str
    tol: float
    grid: Grid
    k_max: Optional[int]
    entries: List[CheckEntry]
    min_margin: Real
    passed: bool
    elapsed_seconds: float
    threshold: float = 0.0


def _finish(suite_id, tol, grid, k_max, entries, t0, threshold=0.0) -> CheckReport:
    margins = [e.margin for e in entries]
    bad = any(not np.isfinite(m) for m in margins)
    if bad:
        min_margin = Real(np.nan)
        passed = False
    else:
        min_margin = min(margins)
        passed = bool(entries) and all(m > threshold for m in margins)
    return CheckReport(
        suite_id=suite_id,
        tol=float(tol),
        grid=grid,
        k_max=k_max,
        entries=entries,
        min_margin=min_margin,
        passed=passed,
        elapsed_seconds=time.perf_counter() - t0,
        threshold=threshold,
    )


_FAILED = (Real(np.nan), Real(np.nan), Real(np.nan))


# ---------------------------------------------------------------------------
# merged-series coefficient tables, assembled exactly at import


def _build_w_coeffs():
    # c_k = 1/(k!(k+1)!) - b_k for the difference kernel, k = 3..21, where b_k
    # are the series coefficients of u/(1-e^(-u)); b_k vanishes for odd k >= 3
    cs = []
    for k in range(3, 22):
        c = Fraction(1, math.factorial(k) * math.factorial(k + 1))
        if k % 2 == 0:
            c -= BERNOULLI[k] / math.factorial(k)
        cs.append(_fraction_to_real(c))
    return np.array(cs, dtype=Real)


def _build_pb_coeffs():
    # (1 + u/2 + u^2/12) - u/(1-e^(-u)) = -sum_{j>=2} B_2j u^(2j) / (2j)!
    return np.array(
        [-_fraction_to_real(BERNOULLI[2 * j] / math.factorial(2 * j)) for j in range(2, 11)],
        dtype=Real,
    )


def _build_hm1_coeffs():
    # h(t) - 1 = sum_{m>=4} d_m t^(-m) with d_m = 1/m! minus the trigamma
    # asymptotic coefficient (1 at m=1, 1/2 at m=2, B_{m-1} at odd m >= 3);
    # d_1 = d_2 = d_3 = 0 and d_4 = d_5 = 1/24, d_6 = 1/720
    ds = []
    for m in range(4, 22):
        c = Fraction(1, math.factorial(m))
        if m % 2 == 1:
            c -= BERNOULLI[m - 1]
        ds.append(_fraction_to_real(c))
    return np.array(ds, dtype=Real)


_W_COEFFS = _build_w_coeffs()
_PB_COEFFS = _build_pb_coeffs()
_HM1_COEFFS = _build_hm1_coeffs()

_W_SWITCH = 0.5
_HM1_SWITCH = 20.0
_KERNEL_TOL = Real(1e-17)


def _w_small(u):
    acc = Real(0)
    for c in _W_COEFFS[::-1]:
        acc = acc * u + c
    return u ** 3 * acc


def _pb_margin_small(u):
    u2 = u * u
    acc = Real(0)
    for c in _PB_COEFFS[::-1]:
        acc = acc * u2 + c
    return u2 * u2 * acc


def h_value(t) -> Real:
    """h(t) = e^(1/t) - psi'(t); positive and decreasing to 1."""
    t = _require_positive("t", t)
    return np.exp(1 / t) - trigamma(t)


def kernel_w(u) -> Real:
    """w(u) = I_1(2 sqrt u)/sqrt u - u/(1 - e^(-u)), the density of h - 1.

    Below u = 1/2 the two terms agree to O(u^3) and the difference is summed
    by the merged series sum_{k>=3} (1/(k!(k+1)!) - b_k) u^k, leading term
    u^3/144; direct subtraction there would throw away most of the mantissa.
    """
    u = _require_positive("u", u)
    if u < _W_SWITCH:
        return _w_small(u)
    return bessel_kernel(u, _KERNEL_TOL).value - u / (-np.expm1(-u))


def _h_minus_1(t: Real) -> Real:
    # cancellation-aware h(t) - 1; the merged expansion keeps ~19 digits at t = 1e4
    if t < _HM1_SWITCH:
        return exp_tail_h(0, t) - trigamma(t)
    x = 1 / t
    acc = Real(0)
    for c in _HM1_COEFFS[::-1]:
        acc = acc * x + c
    return x ** 4 * acc


# ---------------------------------------------------------------------------
# vectorized integrand building blocks (quadrature feeds arrays of nodes)


def _kernel_series_array(n: int, u: np.ndarray) -> np.ndarray:
    # sum_j u^j/(j!(j+n)!) elementwise; length sized from max(u): the term
    # ratio falls below 1/2 past j ~ sqrt(2 max(u)) and 72 more halvings push
    # the tail below longdouble resolution
    umax = float(u.max()) if u.size else 0.0
    J = int(math.sqrt(2 * max(umax, 0.0))) + 72
    j = np.arange(1, J + 1, dtype=Real).reshape(-1, 1)
    f = u[None, :] / (j * (j + n))
    terms = np.cumprod(f, axis=0)
    return (1 + terms.sum(axis=0)) / _int_to_real(_FACT[n])


def _kernel_tail_array(k: int, t: np.ndarray) -> np.ndarray:
    # sum_{m>=k} t^m/(m!(m+1)!) = (t^k/(k!(k+1)!)) 1F2(1; k+1, k+2; t)
    tmax = float(t.max()) if t.size else 0.0
    J = int(math.sqrt(2 * max(tmax, 0.0))) + 72
    i = np.arange(1, J + 1, dtype=Real).reshape(-1, 1)
    f = t[None, :] / ((k + i) * (k + i + 1))
    terms = np.cumprod(f, axis=0)
    start = t ** k / _int_to_real(_FACT[k] * _FACT[k + 1])
    return start * (1 + terms.sum(axis=0))


def _kernel_w_array(u: np.ndarray) -> np.ndarray:
    out = np.empty_like(u)
    small = u < _W_SWITCH
    if small.any():
        us = u[small]
        acc = np.zeros_like(us)
        for c in _W_COEFFS[::-1]:
            acc = acc * us + c
        out[small] = us ** 3 * acc
    big = ~small
    if big.any():
        ub = u[big]
        out[big] = _kernel_series_array(1, ub) - ub / (-np.expm1(-ub))
    return out


# ---------------------------------------------------------------------------
# suites

INEQUALITY_SUITES = ("ineq1", "thm13", "polybound", "kernel_pos")


def _ineq_point(suite: str, t: Real):
    if suite == "ineq1":
        lhs = exp_tail_h(0, t)
        rhs = trigamma(t)
        return lhs, rhs, lhs - rhs
    if suite == "thm13":
        # evaluate the series tight: at t ~ 1e-2 the true margin is ~t^7/18432,
        # far below a tol-truncated I_1
        half = t / 2
        lhs = bessel_i(1, t, _KERNEL_TOL).value
        rhs = half ** 3 / (-np.expm1(-half * half))
        return lhs, rhs, lhs - rhs
    if suite == "polybound":
        lhs = 1 + t / 2 + t * t / 12
        rhs = bern_factor(t)
        margin = _pb_margin_small(t) if t < _W_SWITCH else lhs - rhs
        return lhs, rhs, margin
    # kernel_pos
    lhs = bessel_kernel(t, _KERNEL_TOL).value
    rhs = bern_factor(t)
    margin = _w_small(t) if t < _W_SWITCH else lhs - rhs
    return lhs, rhs, margin


def check_inequality(suite: str, grid: Grid, tol=1e-12) -> CheckReport:
    """Pointwise margin check of one of the four inequalities.

    Margins are oriented claim-positive.  polybound approaches equality as
    u -> 0+, so its pass threshold is -1e-14 instead of 0; its margin is still
    computed cancellation-free (u^4/720 scale) and comes out positive on any
    grid of positive points.
    """
    if suite not in INEQUALITY_SUITES:
        raise DomainError("unknown inequality suite %r" % (suite,))
    t0 = time.perf_counter()
    tol = float(tol)
    entries = []
    for t in grid.points:
        try:
            lhs, rhs, margin = _ineq_point(suite, t)
        except (DomainError, QuadratureError, ValueError):
            lhs, rhs, margin = _FAILED
        entries.append(CheckEntry(t, None, lhs, rhs, margin))
    threshold = -1e-14 if suite == "polybound" else 0.0
    return _finish(suite, tol, grid, None, entries, t0, threshold)


def _cm_direct_value(k: int, t: Real) -> Real:
    v = exp_inv_derivative(k, t) - polygamma(k + 1, t)
    return -v if k % 2 else v


def check_cm_direct(k_max, grid: Grid, tol=1e-12) -> CheckReport:
    """(-1)^k h^(k)(t) > 0 for k = 0..k_max through the direct path.

    h^(k) = (d^k/dt^k) e^(1/t) - psi^(k+1), with the derivative taken from the
    exact coefficient table; entries are ordered k-major, then grid order.
    """
    k_max = _require_int("k_max", k_max)
    if k_max > N_MAX:
        raise DomainError("k_max must not exceed N_MAX = %d" % N_MAX)
    t0 = time.perf_counter()
    entries = []
    for k in range(k_max + 1):
        for t in grid.points:
            try:
                v = _cm_direct_value(k, t)
            except (DomainError, QuadratureError, ValueError):
                v = Real(np.nan)
            entries.append(CheckEntry(t, k, v, Real(0), v))
    return _finish("cm_direct", tol, grid, k_max, entries, t0)


def check_cm_laplace(k_max, grid: Grid, tol=1e-6) -> CheckReport:
    """(-1)^k h^(k)(t) as 1_{k=0} + integral_0^inf w(u) u^k e^(-tu) du.

    Each value must be positive and agree with the direct path to relative
    tol; the margin is the smaller of the positivity margin and
    tol |direct| - |laplace - direct|.  The quadrature tolerance for each
    point is scaled from the direct value, which is the oracle here.
    """
    k_max = _require_int("k_max", k_max)
    if k_max > N_MAX:
        raise DomainError("k_max must not exceed N_MAX = %d" % N_MAX)
    if float(grid.points[0]) < 0.1 - 1e-12:
        raise DomainError("cm_laplace grid points must be at least 0.1")
    t0 = time.perf_counter()
    tol = float(tol)
    entries = []
    for k in range(k_max + 1):
        spec = IntegrandSpec(
            lambda u, kk=k: _kernel_w_array(u) * u ** kk,
            (1.0, 2.0, float(k)),
        )
        for t in grid.points:
            try:
                direct = _cm_direct_value(k, t)
                tol_arg = tol * min(Real(1), abs(direct)) / 4
                qv = laplace_integral(spec, t, tol_arg)
                lap = qv.value + (1 if k == 0 else 0)
                agree = Real(tol) * abs(direct) - abs(lap - direct)
                entries.append(CheckEntry(t, k, lap, direct, min(lap, agree)))
            except (DomainError, QuadratureError, ValueError):
                entries.append(CheckEntry(t, k, *_FAILED))
    return _finish("cm_laplace", tol, grid, k_max, entries, t0)


def check_representations(k_max, z_grid: Grid, tol=1e-8) -> CheckReport:
    """H_k(z) reconstructed from both integral representations.

    Route (a):  H_k(z) = [1/(k!(k+1)!)] integral_0^inf 1F2(1;k+1,k+2;t) t^k e^(-zt) dt,
    with the integrand summed as k!(k+1)! sum_{m>=k} t^m/(m!(m+1)!).
    Route (b):  H_k(z) = z^-(k+1) [1/(k+1)! + integral_0^inf g_k(t) e^(-zt) dt]
    with g_k(t) = sum_{j>=0} t^j/(j!(j+k+2)!) = I_{k+2}(2 sqrt t)/t^((k+2)/2).
    At k = 0 the two routes are exactly the classical displays
    e^(1/z) = 1 + integral I_1(2 sqrt t)/sqrt t e^(-zt) dt and
    e^(1/z) = 1 + z^-1 [1 + integral I_2(2 sqrt t)/t e^(-zt) dt].
    Each route must match exp_tail_h within tol * max(1, |H_k|); two entries
    per (k, z), route (a) first.
    """
    k_max = _require_int("k_max", k_max)
    if k_max > N_MAX:
        raise DomainError("k_max must not exceed N_MAX = %d" % N_MAX)
    if float(z_grid.points[0]) < 0.1 - 1e-12:
        raise DomainError("representation grid points must be at least 0.1")
    t0 = time.perf_counter()
    tol = float(tol)
    entries = []
    for k in range(k_max + 1):
        fac = _int_to_real(_FACT[k] * _FACT[k + 1])
        inv_fk1 = 1 / _int_to_real(_FACT[k + 1])
        spec_a = IntegrandSpec(
            lambda x, kk=k, f=fac: _kernel_tail_array(kk, x) * f,
            (1.0, 2.0, float(k)),
        )
        spec_b = IntegrandSpec(
            lambda x, kk=k: _kernel_series_array(kk + 2, x),
            (1.0, 2.0, 0.0),
        )
        for z in z_grid.points:
            lhs = exp_tail_h(k, z)
            budget = Real(tol) * max(Real(1), lhs)
            try:
                est_a = lhs * fac
                qa = laplace_integral(spec_a, z, (budget * fac / 4) / max(Real(1), est_a))
                rhs_a = qa.value / fac
                entries.append(CheckEntry(z, k, lhs, rhs_a, budget - abs(lhs - rhs_a)))
            except (DomainError, QuadratureError, ValueError):
                entries.append(CheckEntry(z, k, *_FAILED))
            try:
                zk1 = z ** (k + 1)
                est_b = abs(lhs * zk1 - inv_fk1)
                qb = laplace_integral(spec_b, z, (budget * zk1 / 4) / max(Real(1), est_b))
                rhs_b = (inv_fk1 + qb.value) / zk1
                entries.append(CheckEntry(z, k, lhs, rhs_b, budget - abs(lhs - rhs_b)))
            except (DomainError, QuadratureError, ValueError):
                entries.append(CheckEntry(z, k, *_FAILED))
    return _finish("representations", tol, z_grid, k_max, entries, t0)


def check_limit(t_grid: Grid, tol=1e-12) -> CheckReport:
    """h(t) -> 1: decay bound, monotone approach, and the first-order rate.

    Per point t the margin is the smallest of three normalized slacks:
    the rate window (h(t)-1) 24 t^4 in [1 - 5/t, 1 + 5/t], the decay bound
    |h(t)-1| <= 2/(24 t^4), and strict decrease of |h(t)-1| along the grid.
    Entries report lhs = (h(t)-1) 24 t^4 against rhs = 1.
    """
    if float(t_grid.points[0]) < 10 - 1e-9 or float(t_grid.points[-1]) > 1e4 + 1e-6:
        raise DomainError("limit grid must lie within [10, 1e4]")
    t0 = time.perf_counter()
    entries = []
    prev = None
    for t in t_grid.points:
        try:
            d = _h_minus_1(t)
            t4 = t ** 4
            rate = d * 24 * t4
            margs = [(5 / t - abs(rate - 1)) * (t / 5), 1 - abs(d) * 12 * t4]
            if prev is not None:
                margs.append(1 - d / prev)
            prev = d
            entries.append(CheckEntry(t, None, rate, Real(1), min(margs)))
        except (DomainError, QuadratureError, ValueError):
            prev = None
            entries.append(CheckEntry(t, None, *_FAILED))
    return _finish("limit", tol, t_grid, None, entries, t0)


# ---------------------------------------------------------------------------
# suite registry used by the CLI

ALL_SUITES = (
    "ineq1",
    "thm13",
    "polybound",
    "kernel_pos",
    "cm_direct",
    "cm_laplace",
    "representations",
    "limit",
)

SUITE_DEFAULTS = {
    "ineq1": ((1e-2, 1e3, 200, "log"), 1e-12, None),
    "thm13": ((1e-2, 1e3, 200, "log"), 1e-12, None),
    "polybound": ((1e-6, 50.0, 200, "log"), 1e-12, None),
    "kernel_pos": ((1e-3, 200.0, 1000, "log"), 1e-12, None),
    "cm_direct": ((0.1, 100.0, 200, "log"), 1e-12, 10),
    "cm_laplace": ((0.1, 100.0, 200, "log"), 1e-6, 10),
    "representations": ((0.1, 100.0, 200, "log"), 1e-8, 5),
    "limit": ((10.0, 1e4, 200, "log"), 1e-12, None),
}


def run_suite(suite_id: str, grid: Optional[Grid] = None, tol=None, k_max=None) -> CheckReport:
    """Run one suite with its registry defaults, honoring any overrides."""
    if suite_id not in SUITE_DEFAULTS:
        raise DomainError("unknown suite %r" % (suite_id,))
    gspec, dtol, dk = SUITE_DEFAULTS[suite_id]
    g = grid if grid is not None else Grid(*gspec)
    tl = dtol if tol is None else float(tol)
    if tl <= 0 or not math.isfinite(tl):
        raise DomainError("tol must be a positive finite real")
    km = dk if k_max is None else k_max
    if suite_id in INEQUALITY_SUITES:
        return check_inequality(suite_id, g, tl)
    if suite_id == "cm_direct":
        return check_cm_direct(km, g, tl)
    if suite_id == "cm_laplace":
        return check_cm_laplace(km, g, tl)
    if suite_id == "representations":
        return check_representations(km, g, tl)
    return check_limit(g, tl)
