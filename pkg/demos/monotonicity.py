"""
Complete monotonicity of h(t) = e^{1/t} - psi'(t)
=================================================

h is positive, decreasing, convex, ... : every derivative alternates in
sign.  The harness checks this two ways (differentiate directly, or
integrate the positive Laplace kernel), plus the inequality chain that
proves the kernel is positive in the first place.  This script runs the
full battery and prints the observed margins.
"""
import numpy as np

from monotone_kernel import (
    ALL_SUITES,
    Grid,
    h_value,
    kernel_w,
    run_suite,
)

# ------------------------------------------------------------------
# The function itself: monotone decreasing from +inf to 1.
print("h(t) = e^{1/t} - psi'(t) along a log grid")
for t in (0.05, 0.2, 1.0, 5.0, 25.0, 200.0):
    print("  h(%-6g) = %.18f" % (t, float(h_value(t))))

# The approach to the limit is quartic: 24 t^4 (h - 1) -> 1.
print()
print("limit rate 24 t^4 (h(t) - 1)")
for t in (10.0, 100.0, 1000.0):
    rate = float((h_value(t) - 1) * 24 * np.longdouble(t) ** 4)
    print("  t=%-6g  rate=%.12f" % (t, rate))

# ------------------------------------------------------------------
# The Laplace kernel w(u) = I_1(2 sqrt(u))/sqrt(u) - u/(1 - e^{-u}).
# Everything rests on w staying positive; near zero it is ~ u^3/144.
print()
print("kernel w(u), scaled by the leading coefficient near zero")
for u in (1e-3, 1e-2, 0.1, 1.0, 10.0):
    w = float(kernel_w(u))
    print("  u=%-6g  w=%12.5e  144 w / u^3 = %.6f" % (u, w, 144 * w / u**3))

# ------------------------------------------------------------------
# Full verification battery at the default grids and tolerances.
print()
print("verification suites")
for suite in ALL_SUITES:
    r = run_suite(suite)
    print("  %-16s %s  min_margin=%11.4e  entries=%d  %.2fs"
          % (suite, "PASS" if r.passed else "FAIL",
             float(r.min_margin), len(r.entries), r.elapsed_seconds))

# ------------------------------------------------------------------
# A closer look at one suite: the sign-alternating derivatives.  Margins
# are (-1)^k h^(k)(t) itself, smallest at large t where h flattens out.
print()
r = run_suite("cm_direct", grid=Grid(0.5, 50.0, 5, "log"), k_max=4)
print("cm_direct margins, (-1)^k h^(k)(t) on a coarse grid")
ts = sorted({e.t for e in r.entries})
print("%8s " % "t", " ".join("%12s" % ("k=%d" % k) for k in range(5)))
for t in ts:
    row = [e.margin for e in r.entries if e.t == t]
    print("%8.3f " % t, " ".join("%12.4e" % m for m in row))
