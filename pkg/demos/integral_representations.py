"""
Laplace representations of the exponential tail
===============================================

The tail H_k(z) = e^{1/z} - sum_{m<=k} z^{-m}/m! has two integral
forms: one weights the Bessel kernel tail by k!(k+1)!, the other pulls
out 1/(k+1)! and integrates a higher kernel.  Both are Laplace
transforms of positive integrands, which is what makes H_k completely
monotonic.  This script evaluates both sides with the adaptive
Gauss-Kronrod rule and shows the quadrature diagnostics.
"""
import math

import numpy as np

from monotone_kernel import (
    IntegrandSpec,
    bessel_kernel,
    exp_tail_h,
    laplace_integral,
)

# ------------------------------------------------------------------
# k = 0: e^{1/z} = 1 + int_0^inf B(u) e^{-zu} du with B the rescaled
# Bessel kernel.  At z = 1 the integral is e - 1.
spec = IntegrandSpec(lambda u: np.asarray([float(bessel_kernel(x).value) for x in u],
                                          dtype=np.longdouble),
                     growth_envelope=(1.0, 2.0, 0.0))
qv = laplace_integral(spec, 1.0, 1e-12)
print("int_0^inf B(u) e^{-u} du = %.18f" % float(qv.value))
print("e - 1                    = %.18f" % (math.e - 1))
print("reported error %.2e, %d integrand evaluations"
      % (float(qv.error_estimate), qv.evaluations))

# ------------------------------------------------------------------
# General k, both routes against the direct series tail.
print()
print("H_k(z): direct tail vs both Laplace routes")
print("%3s %6s  %24s  %10s  %10s" % ("k", "z", "H_k(z)", "|a-direct|", "|b-direct|"))
for k in (0, 1, 3, 5):
    fac = np.longdouble(math.factorial(k)) * math.factorial(k + 1)
    for z in (0.5, 1.0, 4.0):
        direct = exp_tail_h(k, z)

        # route (a): the Bessel kernel tail from term m = k onward,
        # sum_{m>=k} u^m / (m! (m+1)!), scaled by k!(k+1)!
        def tail_a(u, kk=k):
            out = np.empty_like(u)
            for i, x in enumerate(u):
                b = bessel_kernel(x).value
                s = np.longdouble(0)
                f = np.longdouble(1)
                for m in range(kk):
                    s += x**m / (f * f * (m + 1))
                    f *= m + 1
                out[i] = b - s
            return out

        qa = laplace_integral(IntegrandSpec(lambda u: tail_a(u) * fac,
                                            growth_envelope=(1.0, 2.0, float(k))),
                              z, 1e-13)
        rhs_a = qa.value / fac

        # route (b): z^{-k-1} [1/(k+1)! + int B_{k+2}(u) e^{-zu} du]
        # with B_n(u) = sum_m u^m / (m! (m+n)!) = I_n(2 sqrt(u)) / u^{n/2}.
        def shifted(u, n=k + 2):
            out = np.empty_like(u)
            for i, x in enumerate(u):
                s = np.longdouble(0)
                term = np.longdouble(1) / math.factorial(n)
                m = 0
                while True:
                    s += term
                    m += 1
                    term *= x / (m * (m + n))
                    if term < 1e-22 * s:
                        break
                out[i] = s
            return out

        qb = laplace_integral(IntegrandSpec(shifted, growth_envelope=(1.0, 2.0, 0.0)),
                              z, 1e-13)
        rhs_b = (1 / np.longdouble(math.factorial(k + 1)) + qb.value) / np.longdouble(z) ** (k + 1)

        print("%3d %6.2f  %24.16e  %10.2e  %10.2e"
              % (k, z, float(direct),
                 abs(float(rhs_a - direct)), abs(float(rhs_b - direct))))

# ------------------------------------------------------------------
# The quadrature rule is honest about what it cannot do: ask for more
# digits than longdouble holds and it raises instead of reporting a
# fictitious error estimate.
print()
from monotone_kernel import QuadratureError

try:
    laplace_integral(spec, 1.0, 1e-26)
except QuadratureError as exc:
    print("tol=1e-26 ->", exc)
