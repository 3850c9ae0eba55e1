"""Special functions and verification suites for a completely monotonic kernel.

The library studies h(t) = exp(1/t) - psi'(t) and the nonnegative Laplace
density behind it, w(u) = I_1(2 sqrt(u))/sqrt(u) - u/(1 - exp(-u)).  All
scalar kernels run in extended precision (numpy longdouble) with explicit
truncation-error bounds; `verify` turns the identities and inequalities into
machine-checkable suites.
"""

from .polygamma import (
    BERNOULLI,
    M_MAX,
    bern_factor,
    polygamma,
    polygamma_integral,
    trigamma,
)
from .quadrature import (
    MAX_PANELS,
    IntegrandSpec,
    QuadratureError,
    QuadratureValue,
    laplace_integral,
)
from .series import (
    MANTISSA_BITS,
    N_MAX,
    DerivativeCoeffs,
    DomainError,
    Real,
    SeriesValue,
    bessel_i,
    bessel_kernel,
    exp_inv_derivative,
    exp_inv_derivative_coeffs,
    exp_tail_h,
    hyper_1f2,
    q_family,
    shifted_factorial,
)
from .verify import (
    ALL_SUITES,
    INEQUALITY_SUITES,
    CheckEntry,
    CheckReport,
    Grid,
    check_cm_direct,
    check_cm_laplace,
    check_inequality,
    check_limit,
    check_representations,
    h_value,
    kernel_w,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_SUITES",
    "BERNOULLI",
    "CheckEntry",
    "CheckReport",
    "DerivativeCoeffs",
    "DomainError",
    "Grid",
    "INEQUALITY_SUITES",
    "IntegrandSpec",
    "M_MAX",
    "MANTISSA_BITS",
    "MAX_PANELS",
    "N_MAX",
    "QuadratureError",
    "QuadratureValue",
    "Real",
    "SeriesValue",
    "bern_factor",
    "bessel_i",
    "bessel_kernel",
    "check_cm_direct",
    "check_cm_laplace",
    "check_inequality",
    "check_limit",
    "check_representations",
    "exp_inv_derivative",
    "exp_inv_derivative_coeffs",
    "exp_tail_h",
    "h_value",
    "hyper_1f2",
    "kernel_w",
    "laplace_integral",
    "polygamma",
    "polygamma_integral",
    "q_family",
    "run_suite",
    "shifted_factorial",
    "trigamma",
    "__version__",
]
