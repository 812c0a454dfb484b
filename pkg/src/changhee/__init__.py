"""Changhee polynomials, the ODE coefficients of F = (1+t)^x / (2+t), and exact identity checks."""

from changhee.algebra import (
    Polynomial,
    binomial_general,
    factorial,
    falling_factorial_poly,
    falling_factorial_scalar,
    format_rational,
    parse_rational,
)
from changhee.coeffs import CoeffTable, closed_form_table, coeff_closed_form, coeff_table, nested_sum
from changhee.kernels import BACKEND
from changhee.sequences import (
    changhee_poly,
    changhee_via_stirling,
    euler_poly,
    euler_via_stirling,
    stirling1,
    stirling2,
)
from changhee.series import (
    TruncatedSeries,
    ts_2F,
    ts_F,
    ts_binomial_x,
    ts_compose,
    ts_derivative,
    ts_expm1,
    ts_inverse,
    ts_log1p,
    ts_mul,
    ts_shifted_pow,
)
from changhee.verify import (
    VerificationReport,
    theorem_2_2_rhs,
    verify_derivative_shift,
    verify_gf_composition,
    verify_stirling,
    verify_theorem_2_1,
    verify_theorem_2_2,
)

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop every memoised table (for cold timings and memory release)."""
    from changhee import algebra, coeffs, sequences, series

    for fn in (
        algebra.falling_factorial_poly,
        coeffs._rows_upto,
        sequences.euler_poly,
        sequences.changhee_poly,
        series.ts_shifted_pow,
        series.ts_binomial_x,
        series.ts_F,
        series.ts_2F,
    ):
        fn.cache_clear()
    sequences._S1.clear()
    sequences._S2.clear()
