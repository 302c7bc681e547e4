"""Exact rational series with the closed-form Hadamard product table."""

from .hadamard import diag_apply, diag_element, dilate, hadamard, hadamard_basis
from .hw import Degree, NormalForm, bf_apply, hw_degree, hw_mul, normal_order
from .oracle import (TruncatedSeries, convolve, diff, pointwise_mul, restrict,
                     shift, truncate)
from .scalar import (I, ONE, ZERO, Scalar, binomial, falling_factorial,
                     parse_scalar, rising_factorial, scalar_arith)
from .series import (LAURENT, POWER, FactoredFraction, ModeMismatchError,
                     Monomial, PoleTerm, RationalSeries, SeriesError, add,
                     cauchy_mul, coefficient, constant, make_series, monomial,
                     partial_fractions, pole, pole_series, scale, to_factored,
                     zero)

__version__ = "0.1.0"
