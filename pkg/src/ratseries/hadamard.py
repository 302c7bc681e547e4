"""Hadamard (coefficientwise) product through the closed multiplication table.

The table rests on two facts: Hadamard multiplication by ``1/(1-z)^(k+1)``
is the diagonal operator ``sum_j C(k,j)/j! A^j a^j`` acting through
Bargmann-Fock, and multiplication by ``1/(1-alpha*z)`` is the dilation
``z -> alpha*z``.
"""

from __future__ import annotations

from .hw import NormalForm, bf_apply
from .scalar import ONE, Scalar, binomial, coerce, factorial, rising_factorial
from .series import (POWER, BasisTerm, Monomial, PoleTerm, RationalSeries,
                     SeriesError, pole, same_mode)


def dilate(alpha, f: RationalSeries) -> RationalSeries:
    """``f(alpha*z)``."""
    alpha = coerce(alpha)
    if alpha.is_zero():
        raise SeriesError("dilation by zero")
    acc: dict[BasisTerm, Scalar] = {}
    for term, c in f.items():
        if isinstance(term, Monomial):
            acc[term] = c * alpha ** term.exponent
        else:
            acc[PoleTerm(alpha * term.alpha, term.mult)] = c
    return RationalSeries._canonical(f.mode, acc)


def diag_element(k: int) -> NormalForm:
    """``sum_{j<=k} C(k,j)/j! A^j a^j``, the operator of Hadamard product by ``1/(1-z)^(k+1)``."""
    if k < 0:
        raise ValueError("diagonal index must be >= 0")
    return NormalForm([((j, j), binomial(k, j) / factorial(j)) for j in range(k + 1)])


def diag_apply(k: int, f: RationalSeries) -> RationalSeries:
    """Hadamard product by ``1/(1-z)^(k+1)`` through the diagonal operator.

    The operator is diagonal, so it maps each ``z^n`` to a multiple of
    itself; monomials with ``n < 0`` are dropped first, matching the
    zero-extended table in Laurent mode.
    """
    if any(isinstance(t, Monomial) and t.exponent < 0 for t, _ in f.items()):
        f = RationalSeries._canonical(f.mode, {t: c for t, c in f.items()
                                               if not (isinstance(t, Monomial) and t.exponent < 0)})
    return bf_apply(diag_element(k), f)


def _pole_pole(alpha: Scalar, k: int, beta: Scalar, l: int) -> dict[BasisTerm, Scalar]:
    # 1/(1-alpha z)^(k+1) . 1/(1-beta z)^(l+1)
    #   = dilate(alpha*beta, sum_j C(k,j)/j! (l+1)^(j) sum_s C(j,s)(-1)^(j-s) / (1-z)^(l+s+1))
    ab = alpha * beta
    acc: dict[BasisTerm, Scalar] = {}
    for j in range(k + 1):
        outer = binomial(k, j) / factorial(j) * rising_factorial(l + 1, j)
        for s in range(j + 1):
            c = outer * binomial(j, s)
            if (j - s) % 2:
                c = -c
            t = pole(ab, l + s + 1)
            acc[t] = acc[t] + c if t in acc else c
    return acc


def _monomial_pole(n: int, alpha: Scalar, mult: int) -> dict[BasisTerm, Scalar]:
    if n < 0:
        # the table is extended by zero below the constant term
        return {}
    return {Monomial(n): binomial(n + mult - 1, n) * alpha ** n}


def _table(t1: BasisTerm, t2: BasisTerm) -> dict[BasisTerm, Scalar]:
    if isinstance(t1, Monomial) and isinstance(t2, Monomial):
        return {t1: ONE} if t1.exponent == t2.exponent else {}
    if isinstance(t1, Monomial):
        return _monomial_pole(t1.exponent, t2.alpha, t2.mult)
    if isinstance(t2, Monomial):
        return _monomial_pole(t2.exponent, t1.alpha, t1.mult)
    return _pole_pole(t1.alpha, t1.mult - 1, t2.alpha, t2.mult - 1)


def hadamard_basis(t1: BasisTerm, t2: BasisTerm, mode: str = POWER) -> RationalSeries:
    """The multiplication-table entry ``t1 (.) t2``."""
    return RationalSeries(mode, _table(t1, t2).items())


def hadamard(f: RationalSeries, g: RationalSeries) -> RationalSeries:
    """Coefficientwise product, by bilinear extension of the table."""
    mode = same_mode(f, g)
    acc: dict[BasisTerm, Scalar] = {}
    if f.is_zero() or g.is_zero():
        return RationalSeries(mode)
    for t1, c1 in f.items():
        for t2, c2 in g.items():
            c = c1 * c2
            for t, v in _table(t1, t2).items():
                w = c * v
                acc[t] = acc[t] + w if t in acc else w
    return RationalSeries._canonical(mode, acc)
