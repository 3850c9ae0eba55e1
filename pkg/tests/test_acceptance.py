"""Acceptance criteria for the library, one test per criterion.

Each test prints a single `acceptance NN <label>: PASS|FAIL` line (past the
capture plugin, so it shows in any run) and then asserts.  Reference values
are from independent 40-digit evaluations, quoted to ~19+ digits.
"""
import math
import time

import numpy as np

from monotone_kernel.polygamma import polygamma, trigamma
from monotone_kernel.quadrature import IntegrandSpec, laplace_integral
from monotone_kernel.series import Real, bessel_kernel, exp_inv_derivative, exp_tail_h, q_family
from monotone_kernel.verify import (
    Grid,
    check_cm_direct,
    check_inequality,
    check_limit,
    h_value,
    kernel_w,
    run_suite,
    _cm_direct_value,
    _kernel_series_array,
    _kernel_tail_array,
    _kernel_w_array,
)

R = Real

MARGIN_1 = R("0.0733477616108187988878723")    # (e-1) - pi^2/6
H_1 = R("1.073347761610818798887872")          # h(1)
NEG_H1_1 = R("0.3141680221398566645608111")    # -h'(1) = e - 2 zeta(3)
H2_1 = R("1.66090608311030655698484")          # h''(1) = 3e - pi^4/15
E_M1 = R("1.718281828459045235360287")         # e - 1
Q_1 = R("0.02797279921331664752201225")        # 7e - 19
RATES = {10.0: 1.0997745508508854816, 30.0: 1.0333494162926239111,
         100.0: 1.0100027667526074922, 300.0: 1.0033336827164521059}


def report(capsys, num: int, label: str, ok: bool, detail: str = ""):
    with capsys.disabled():
        suffix = " (%s)" % detail if detail else ""
        print("acceptance %02d %s: %s%s" % (num, label, "PASS" if ok else "FAIL", suffix))
    assert ok, "acceptance criterion %d (%s) failed %s" % (num, label, detail)


def test_criterion_01_exponential_trigamma_inequality(capsys):
    t0 = time.perf_counter()
    r = check_inequality("ineq1", Grid(1e-2, 1e3, 200, "log"))
    spot = (exp_tail_h(0, 1.0)) - trigamma(1.0)
    dt = time.perf_counter() - t0
    ok = (
        r.passed
        and all(e.margin > 0 for e in r.entries)
        and abs(float(spot - MARGIN_1)) < 1e-9
        and dt < 1.0
    )
    report(capsys, 1, "exp-trigamma inequality on [1e-2,1e3]", ok, "%.2fs" % dt)


def test_criterion_02_bessel_lower_bound(capsys):
    t0 = time.perf_counter()
    r = check_inequality("thm13", Grid(1e-2, 50.0, 200, "log"))
    # sign agreement with the kernel inequality at u = (t/2)^2, 50 points
    matched = True
    for e in r.entries[::4]:
        u = float(e.t) ** 2 / 4
        matched &= (float(e.margin) > 0) == (float(kernel_w(u)) > 0)
    dt = time.perf_counter() - t0
    ok = r.passed and matched and dt < 1.0
    report(capsys, 2, "Bessel lower bound on (0,50]", ok, "%.2fs" % dt)


def test_criterion_03_polynomial_bound(capsys):
    r = check_inequality("polybound", Grid(1e-6, 50.0, 200, "log"))
    # margin ~ u^4/720 at u = 1e-3, required within a factor of 2
    m = None
    for e in r.entries:
        if abs(float(e.t) - 1e-3) / 1e-3 < 0.2:
            m = float(e.margin)
            break
    if m is None:
        m = float(check_inequality("polybound", Grid(1e-3, 1.0, 2, "log")).entries[0].margin)
    lead = 1e-3**4 / 720
    ok = r.passed and lead / 2 < m < lead * 2
    report(capsys, 3, "polynomial bound vs Bernoulli factor", ok)


def test_criterion_04_kernel_positivity_and_leading_term(capsys):
    r = check_inequality("kernel_pos", Grid(1e-3, 200.0, 1000, "log"))
    scaled = float(kernel_w(1e-3)) * 144e9
    ok = r.passed and abs(scaled - 1.0) < 1e-2
    report(capsys, 4, "kernel positivity, leading term 1/144", ok, "w*144e9=%.6f" % scaled)


def test_criterion_05_complete_monotonicity_direct(capsys):
    t0 = time.perf_counter()
    r = check_cm_direct(10, Grid(0.1, 100.0, 100, "log"))
    h0 = h_value(1.0)
    h1 = -(exp_inv_derivative(1, 1.0) - polygamma(2, 1.0))
    h2 = exp_inv_derivative(2, 1.0) - polygamma(3, 1.0)
    dt = time.perf_counter() - t0
    ok = (
        r.passed
        and abs(float(h0 / H_1) - 1) < 1e-6
        and abs(float(h1 / NEG_H1_1) - 1) < 1e-6
        and abs(float(h2 / H2_1) - 1) < 1e-6
        and dt < 5.0
    )
    report(capsys, 5, "(-1)^k h^(k) > 0, k<=10", ok, "%.2fs" % dt)


def test_criterion_06_two_path_agreement(capsys):
    t0 = time.perf_counter()
    worst = 0.0
    for k in range(6):
        spec = IntegrandSpec(
            lambda u, kk=k: _kernel_w_array(u) * u**kk, (1.0, 2.0, float(k))
        )
        for t in (0.5, 1.0, 2.0, 5.0, 10.0):
            direct = _cm_direct_value(k, R(t))
            qv = laplace_integral(spec, t, 1e-6 * min(1.0, abs(float(direct))) / 4)
            lap = qv.value + (1 if k == 0 else 0)
            worst = max(worst, abs(float((lap - direct) / direct)))
    dt = time.perf_counter() - t0
    ok = worst < 1e-6 and dt < 30.0
    report(capsys, 6, "Laplace path = direct path", ok, "worst rel %.2e, %.2fs" % (worst, dt))


def test_criterion_07_integral_representations(capsys):
    worst = 0.0
    for k in range(6):
        fac = R(math.factorial(k)) * R(math.factorial(k + 1))
        inv_fk1 = 1 / R(math.factorial(k + 1))
        spec_a = IntegrandSpec(
            lambda x, kk=k, f=fac: _kernel_tail_array(kk, x) * f, (1.0, 2.0, float(k))
        )
        spec_b = IntegrandSpec(
            lambda x, kk=k: _kernel_series_array(kk + 2, x), (1.0, 2.0, 0.0)
        )
        for z in (0.5, 1.0, 2.0, 5.0, 10.0):
            lhs = exp_tail_h(k, z)
            budget = float(max(R(1e-8), R(1e-8) * abs(lhs)))
            qa = laplace_integral(spec_a, z, budget / 4)
            rhs_a = qa.value / fac
            zk1 = R(z) ** (k + 1)
            qb = laplace_integral(spec_b, z, budget / 4)
            rhs_b = (inv_fk1 + qb.value) / zk1
            worst = max(
                worst,
                abs(float(lhs - rhs_a)) / budget,
                abs(float(lhs - rhs_b)) / budget,
            )
            if k == 0 and z == 1.0:
                base_err = abs(float(rhs_a - E_M1))
    ok = worst < 1.0 and base_err < 1e-8
    report(capsys, 7, "both integral representations of H_k", ok,
           "worst err %.2f of budget, k=0 vs e-1 %.1e" % (worst, base_err))


def test_criterion_08_limit_rate(capsys):
    h100 = abs(float(h_value(100.0) - 1))
    ok = h100 < 1e-8
    for t, ref in RATES.items():
        rate = float((h_value(t) - 1) * 24 * R(t) ** 4)
        ok = ok and (1 - 5 / t) <= rate <= (1 + 5 / t) and abs(rate / ref - 1) < 1e-6
    r = check_limit(Grid(10.0, 1e4, 200, "log"))
    ok = ok and r.passed
    report(capsys, 8, "24 t^4 (h-1) -> 1 with 5/t band", ok, "|h(100)-1|=%.1e" % h100)


def test_criterion_09_remainder_chain(capsys):
    grid = Grid(1e-6, 50.0, 200, "log")
    ok = q_family(0.0) == (0, 0, 0, 0)
    for u in grid.points:
        vals = q_family(float(u))
        ok = ok and all(v > 0 for v in vals)
    ok = ok and abs(float(q_family(1.0)[0] - Q_1)) < 1e-10
    report(capsys, 9, "Q, Q', Q'', Q''' positive chain", ok)


def test_criterion_10_module_invariant_properties(capsys):
    # series truncation honesty
    ok = True
    for u in (1e-4, 0.3, 2.0, 17.0, 90.0):
        loose = bessel_kernel(u, 1e-9)
        tight = bessel_kernel(u, 1e-19)
        ok = ok and abs(float(loose.value - tight.value)) <= float(loose.error_bound)
    # polygamma recurrence below the asymptotic threshold
    for m, t in ((1, 3.7), (7, 0.9), (25, 1.3)):
        lhs = polygamma(m, t) - polygamma(m, R(t) + 1)
        rhs = (-1) ** (m + 1) * R(math.factorial(m)) * R(t) ** (-(m + 1))
        ok = ok and abs(float(lhs / rhs - 1)) < 1e-14
    # quadrature error honesty on exact moments
    for p in (0, 3):
        spec = IntegrandSpec(lambda u, p=p: u**R(p) if p else np.ones_like(u), (1.0, 0.0, float(p)))
        qv = laplace_integral(spec, 2.0, 1e-12)
        exact = R(math.factorial(p)) / R(2) ** (p + 1)
        ok = ok and abs(float(qv.value - exact)) <= float(qv.error_estimate)
    # report determinism
    a = run_suite("polybound", grid=Grid(1e-4, 10.0, 20, "log"))
    b = run_suite("polybound", grid=Grid(1e-4, 10.0, 20, "log"))
    ok = ok and a.min_margin == b.min_margin
    ok = ok and [e.margin for e in a.entries] == [e.margin for e in b.entries]
    report(capsys, 10, "module invariant property groups", ok)
