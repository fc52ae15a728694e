"""Exact Bell/Stirling/Lah polynomial families and involutory power series.

Thin Python layer over the C++ core. All scalars are exact rationals; pass
them as ``Rational``, ``int`` or fraction strings like ``"3/2"``.
"""

from ._invoser import (
    Error,
    ExpressionSyntaxError,
    LaurentPoly,
    NotInvertibleError,
    NotInvolutionError,
    OrderMismatchError,
    Rational,
    Series,
    TrivialInvolutionError,
    ZeroAtPoleError,
    bell_eval,
    bell_poly,
    coefficient_form_check,
    conjugator_from_involution,
    enumerate_partitions,
    eval_series,
    format_expression,
    involution_check_failures,
    involution_from_conjugator,
    involution_from_even_seeds,
    involution_from_even_seeds_symbolic,
    is_involution,
    is_odd,
    lah_eval,
    lah_poly,
    run_suite,
    same_involution_iff_odd_transfer,
    series_add,
    series_compose,
    series_derivative,
    series_inverse,
    series_mul,
    series_negate_argument,
    series_power_over_factorial,
    stirling_first_poly,
)

__all__ = [
    "Error",
    "ExpressionSyntaxError",
    "LaurentPoly",
    "NotInvertibleError",
    "NotInvolutionError",
    "OrderMismatchError",
    "Rational",
    "Series",
    "TrivialInvolutionError",
    "ZeroAtPoleError",
    "bell_eval",
    "bell_poly",
    "coefficient_form_check",
    "conjugator_from_involution",
    "enumerate_partitions",
    "eval_series",
    "format_expression",
    "involution_check_failures",
    "involution_from_conjugator",
    "involution_from_even_seeds",
    "involution_from_even_seeds_symbolic",
    "is_involution",
    "is_odd",
    "lah_eval",
    "lah_poly",
    "run_suite",
    "same_involution_iff_odd_transfer",
    "series_add",
    "series_compose",
    "series_derivative",
    "series_inverse",
    "series_mul",
    "series_negate_argument",
    "series_power_over_factorial",
    "stirling_first_poly",
]
