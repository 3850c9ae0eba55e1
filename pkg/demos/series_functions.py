"""
Series evaluation: rescaled Bessel functions and exponential tails
==================================================================

Walks through the scalar building blocks: the rescaled modified Bessel
series, the exponential remainder H_k, the derivative coefficient tables
for e^{1/t}, and the cancellation-free Q family.  Every series value
carries a computable error bound; the tables below print both.
"""
import numpy as np

from monotone_kernel import (
    bessel_i,
    bessel_kernel,
    exp_inv_derivative,
    exp_inv_derivative_coeffs,
    exp_tail_h,
    q_family,
)

# ------------------------------------------------------------------
# I_nu(t) by its ascending series, with the truncation bound it reports.
# The bound is twice the first omitted term, so halving tol roughly
# halves it until the longdouble floor takes over.
print("modified Bessel I_1 and its reported truncation bound")
print("%8s  %26s  %10s" % ("t", "I_1(t)", "bound"))
for t in (0.1, 1.0, 2.0, 10.0, 40.0):
    v = bessel_i(1, t, tol=1e-17)
    print("%8.2f  %26.18e  %10.2e" % (t, float(v.value), float(v.error_bound)))

# The kernel form I_1(2 sqrt(u)) / sqrt(u) stays finite at u = 0 where the
# raw quotient would be 0/0; the series starts at the constant term 1.
print()
print("rescaled kernel B(u) = I_1(2 sqrt(u))/sqrt(u)")
for u in (0.0, 1e-6, 0.5, 4.0, 100.0):
    v = bessel_kernel(u)
    print("  B(%-6g) = %.18e" % (u, float(v.value)))

# ------------------------------------------------------------------
# H_k(z) = e^{1/z} - partial sum through z^{-k}/k!.  Summing the tail
# directly avoids the subtraction that loses ~k digits near z = 1.
print()
print("exponential tails H_k(1), tail series vs naive subtraction")
z = 1.0
naive_base = np.exp(np.longdouble(1) / z)
acc = np.longdouble(0)
fact = np.longdouble(1)
for k in range(7):
    acc += z ** np.longdouble(-k) / fact
    fact *= k + 1
    naive = naive_base - acc
    tail = exp_tail_h(k, z)
    print("  k=%d  tail=%.18e  naive=%.18e  diff=%.1e"
          % (k, float(tail), float(naive), abs(float(tail - naive))))

# ------------------------------------------------------------------
# d^n/dt^n e^{1/t} = e^{1/t} * (signed integer polynomial in 1/t).
# The coefficient tables are exact integers from a two-term recurrence.
print()
print("derivative coefficient tables for e^{1/t} (exponent: coefficient)")
for n in range(5):
    print("  n=%d  %s" % (n, exp_inv_derivative_coeffs(n).coeffs))
print("value at t=1: d^3/dt^3 e^{1/t} =", float(exp_inv_derivative(3, 1.0)))

# ------------------------------------------------------------------
# Q(u) = (u^2 - 3u + 3) e^u + something small: written that way the
# closed form cancels to u^5/60 near zero.  q_family sums the series
# below u = 1/4 so all four values stay fully accurate.
print()
print("Q family near the origin (all positive, orders u^5, u^4, u^3, u^2)")
print("%10s  %12s  %12s  %12s  %12s" % ("u", "Q", "Q'", "Q''", "Q'''"))
for u in (1e-4, 1e-2, 0.25, 1.0, 5.0):
    q0, q1, q2, q3 = q_family(u)
    print("%10.0e  %12.5e  %12.5e  %12.5e  %12.5e"
          % (u, float(q0), float(q1), float(q2), float(q3)))
