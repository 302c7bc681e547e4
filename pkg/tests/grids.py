"""Shared input grids for the property and acceptance tests."""

from fractions import Fraction
from itertools import product

from ratseries import I, LAURENT, POWER, Monomial, PoleTerm, RationalSeries, Scalar
from ratseries.oracle import default_offset, truncate

ALPHAS = [Scalar(1), Scalar(-1), Scalar(2), Scalar(Fraction(1, 2)), Scalar(3), I]
KS = range(0, 7)
POWER_EXPONENTS = range(0, 9)
LAURENT_EXPONENTS = range(-4, 9)
DEPTH = 64


def basis_terms(mode):
    exps = LAURENT_EXPONENTS if mode == LAURENT else POWER_EXPONENTS
    terms = [Monomial(n) for n in exps]
    terms += [PoleTerm(a, k + 1) for a, k in product(ALPHAS, KS)]
    return terms


def series_grid(mode):
    """Small mixed series plus single basis terms, kept short for speed."""
    one = Scalar(1)
    grid = [RationalSeries(mode, [(Monomial(n), one)]) for n in (0, 1, 3, 8)]
    if mode == LAURENT:
        grid += [RationalSeries(mode, [(Monomial(n), one)]) for n in (-4, -1)]
    grid += [RationalSeries(mode, [(PoleTerm(a, m), one)]) for a in ALPHAS for m in (1, 3)]
    grid += [
        RationalSeries(mode, [(PoleTerm(2, 2), 3), (Monomial(2), Fraction(-1, 2))]),
        RationalSeries(mode, [(PoleTerm(I, 1), Scalar(1, 1)), (PoleTerm(-1, 2), -2)]),
        RationalSeries(mode, [(PoleTerm(Fraction(1, 2), 1), 1), (PoleTerm(3, 1), -1),
                              (Monomial(0), 5)]),
    ]
    if mode == LAURENT:
        grid.append(RationalSeries(mode, [(Monomial(-2), 1), (PoleTerm(1, 2), Fraction(1, 3))]))
    return grid


def common_window(*series, depth=DEPTH):
    """Truncations of all arguments over one shared window."""
    offset = min(default_offset(f) for f in series)
    return [truncate(f, depth, offset=offset) for f in series]
