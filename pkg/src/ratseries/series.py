"""Rational series in the partial-fraction basis.

A series is a finite linear combination of monomials ``z^n`` and pole terms
``1/(1 - alpha*z)^m``.  Since these form a basis, the canonical term map
(zeros dropped, like terms merged) decides equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Union

from .scalar import ONE, ZERO, Scalar, binomial, coerce

POWER = "power"
LAURENT = "laurent"
MODES = (POWER, LAURENT)


class SeriesError(ValueError):
    """Invalid basis term, series, or factored fraction."""


class ModeMismatchError(SeriesError):
    """Two operands live in different algebras (power vs laurent)."""


@dataclass(frozen=True, order=False)
class Monomial:
    exponent: int

    def sort_key(self):
        return (0, self.exponent)


@dataclass(frozen=True, order=False)
class PoleTerm:
    alpha: Scalar
    mult: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", coerce(self.alpha))
        if self.alpha.is_zero():
            raise SeriesError("pole value must be nonzero")
        if not isinstance(self.mult, int) or self.mult < 1:
            raise SeriesError(f"pole multiplicity must be a positive integer, got {self.mult!r}")

    def sort_key(self):
        return (1, self.alpha.sort_key(), self.mult)


BasisTerm = Union[Monomial, PoleTerm]


def pole(alpha, mult: int = 1) -> BasisTerm:
    """``1/(1 - alpha*z)^mult``; multiplicity 0 is read as ``z^0``."""
    if mult == 0:
        return Monomial(0)
    return PoleTerm(coerce(alpha), mult)


def check_mode(mode: str) -> str:
    if mode not in MODES:
        raise SeriesError(f"unknown mode {mode!r}")
    return mode


class RationalSeries:
    """Immutable canonical combination of basis terms in a given mode."""

    __slots__ = ("mode", "_terms", "_hash")

    def __init__(self, mode: str = POWER, terms: Mapping[BasisTerm, object] | Iterable = ()):
        check_mode(mode)
        acc: dict[BasisTerm, Scalar] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for term, c in items:
            if not isinstance(term, (Monomial, PoleTerm)):
                raise SeriesError(f"not a basis term: {term!r}")
            if isinstance(term, Monomial) and mode == POWER and term.exponent < 0:
                raise SeriesError(f"negative exponent z^{term.exponent} in power mode")
            c = coerce(c)
            if term in acc:
                acc[term] = acc[term] + c
            else:
                acc[term] = c
        self.mode = mode
        self._terms = {t: c for t, c in sorted(acc.items(), key=lambda tc: tc[0].sort_key())
                       if not c.is_zero()}
        self._hash = None

    @classmethod
    def _canonical(cls, mode, acc):
        # acc may contain zeros; exponent checks already done by caller
        obj = cls.__new__(cls)
        obj.mode = mode
        obj._terms = {t: c for t, c in sorted(acc.items(), key=lambda tc: tc[0].sort_key())
                      if not c.is_zero()}
        obj._hash = None
        return obj

    @property
    def terms(self) -> dict[BasisTerm, Scalar]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self) -> dict[int, Scalar]:
        return {t.exponent: c for t, c in self._terms.items() if isinstance(t, Monomial)}

    def poles(self) -> dict[tuple[Scalar, int], Scalar]:
        return {(t.alpha, t.mult): c for t, c in self._terms.items() if isinstance(t, PoleTerm)}

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return self.mode == other.mode and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.mode, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        from .printing import format_series
        return f"RationalSeries({self.mode!r}, {format_series(self)!r})"

    def __add__(self, other):
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return add(self, scale(-1, other))

    def __neg__(self):
        return scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, RationalSeries):
            return cauchy_mul(self, other)
        try:
            return scale(coerce(other), self)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return scale(coerce(other), self)
        except TypeError:
            return NotImplemented


# -- construction and linear structure ----------------------------------------

def make_series(mode: str, terms: Iterable[tuple[BasisTerm, object]]) -> RationalSeries:
    return RationalSeries(mode, list(terms))


def zero(mode: str = POWER) -> RationalSeries:
    return RationalSeries(mode)


def monomial(n: int, c=ONE, mode: str = POWER) -> RationalSeries:
    return RationalSeries(mode, [(Monomial(n), c)])


def pole_series(alpha, mult: int = 1, c=ONE, mode: str = POWER) -> RationalSeries:
    return RationalSeries(mode, [(pole(alpha, mult), c)])


def constant(c, mode: str = POWER) -> RationalSeries:
    return monomial(0, c, mode)


def basis_series(term: BasisTerm, mode: str = POWER) -> RationalSeries:
    return RationalSeries(mode, [(term, ONE)])


def same_mode(f: RationalSeries, g: RationalSeries) -> str:
    if f.mode != g.mode:
        raise ModeMismatchError(f"mode mismatch: {f.mode} vs {g.mode}")
    return f.mode


def add(f: RationalSeries, g: RationalSeries) -> RationalSeries:
    mode = same_mode(f, g)
    acc = dict(f._terms)
    for t, c in g._terms.items():
        acc[t] = acc[t] + c if t in acc else c
    return RationalSeries._canonical(mode, acc)


def scale(c, f: RationalSeries) -> RationalSeries:
    c = coerce(c)
    if c.is_zero():
        return RationalSeries(f.mode)
    return RationalSeries._canonical(f.mode, {t: c * v for t, v in f._terms.items()})


def linear_combination(mode: str, parts: Iterable[tuple[object, RationalSeries]]) -> RationalSeries:
    """Sum of ``c * f`` over ``parts`` without intermediate canonicalization."""
    acc: dict[BasisTerm, Scalar] = {}
    for c, f in parts:
        c = coerce(c)
        if c.is_zero():
            continue
        if f.mode != mode:
            raise ModeMismatchError(f"mode mismatch: {mode} vs {f.mode}")
        for t, v in f._terms.items():
            w = c * v
            acc[t] = acc[t] + w if t in acc else w
    return RationalSeries._canonical(mode, acc)


# -- coefficient extraction ----------------------------------------------------

def term_coefficient(term: BasisTerm, n: int) -> Scalar:
    if isinstance(term, Monomial):
        return ONE if term.exponent == n else ZERO
    if n < 0:
        return ZERO
    return binomial(n + term.mult - 1, n) * term.alpha ** n


def coefficient(f: RationalSeries, n: int) -> Scalar:
    """``[z^n] f``."""
    total = ZERO
    for t, c in f._terms.items():
        v = term_coefficient(t, n)
        if not v.is_zero():
            total = total + c * v
    return total


# -- Laurent polynomials as {exponent: Scalar} ---------------------------------

def _poly_clean(p):
    return {e: c for e, c in p.items() if not c.is_zero()}


def poly_add(p, q):
    out = dict(p)
    for e, c in q.items():
        out[e] = out[e] + c if e in out else c
    return _poly_clean(out)


def poly_mul(p, q):
    out: dict[int, Scalar] = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = e1 + e2
            v = c1 * c2
            out[e] = out[e] + v if e in out else v
    return _poly_clean(out)


def poly_pow(p, n: int):
    result = {0: ONE}
    for _ in range(n):
        result = poly_mul(result, p)
    return result


def linear_factor(alpha, mult: int = 1):
    """``(1 - alpha*z)^mult`` as a polynomial."""
    return poly_pow({0: ONE, 1: -coerce(alpha)}, mult)


def poly_divmod(p, q):
    """Divide polynomial ``p`` by ``q`` (nonnegative exponents) with remainder."""
    q = _poly_clean(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    dq = max(q)
    lead_inv = q[dq].inverse()
    rem = _poly_clean(p)
    quot: dict[int, Scalar] = {}
    while rem and max(rem) >= dq:
        dr = max(rem)
        c = rem[dr] * lead_inv
        shift = dr - dq
        quot[shift] = c
        for e, v in q.items():
            k = e + shift
            rem[k] = rem[k] - c * v if k in rem else -(c * v)
        rem = _poly_clean(rem)
    return _poly_clean(quot), rem


# -- factored fractions and partial fractions ----------------------------------

@dataclass(frozen=True)
class FactoredFraction:
    """``numerator / prod (1 - alpha*z)^mult`` with a Laurent-polynomial numerator."""

    numerator: Mapping[int, Scalar]
    factors: tuple[tuple[Scalar, int], ...] = ()

    def __post_init__(self):
        num = _poly_clean({int(e): coerce(c) for e, c in dict(self.numerator).items()})
        object.__setattr__(self, "numerator", num)
        facs = tuple((coerce(a), m) for a, m in self.factors)
        for a, m in facs:
            if a.is_zero():
                raise SeriesError("factor with zero pole value")
            if not isinstance(m, int) or m < 1:
                raise SeriesError(f"factor multiplicity must be a positive integer, got {m!r}")
        object.__setattr__(self, "factors", tuple(sorted(facs, key=lambda am: (am[0].sort_key(), am[1]))))

    def denominator(self):
        q = {0: ONE}
        for a, m in self.factors:
            q = poly_mul(q, linear_factor(a, m))
        return q


def to_factored(f: RationalSeries) -> FactoredFraction:
    """Bring ``f`` over the common denominator of its poles."""
    top: dict[Scalar, int] = {}
    for (a, m) in f.poles():
        top[a] = max(top.get(a, 0), m)
    factors = sorted(top.items(), key=lambda am: am[0].sort_key())
    full = {0: ONE}
    for a, m in factors:
        full = poly_mul(full, linear_factor(a, m))

    num: dict[int, Scalar] = {}
    mono = f.monomials()
    if mono:
        num = poly_add(num, poly_mul(mono, full))
    for (a, m), c in f.poles().items():
        part = {0: c}
        for b, mb in factors:
            part = poly_mul(part, linear_factor(b, mb - m if b == a else mb))
        num = poly_add(num, part)
    return FactoredFraction(num, tuple(factors))


def _substitute_pole_coordinate(p, alpha: Scalar):
    """Rewrite ``p(z)`` as a polynomial in ``w = 1 - alpha*z``."""
    # z = (1 - w)/alpha
    z_in_w = {0: alpha.inverse(), 1: -alpha.inverse()}
    out: dict[int, Scalar] = {}
    if not p:
        return out
    for e in range(max(p), -1, -1):
        out = poly_mul(out, z_in_w) if out else {}
        if e in p:
            out = poly_add(out, {0: p[e]})
    return out


def _series_div(p, q, n: int):
    """First ``n`` Taylor coefficients of ``p/q`` where ``q[0] != 0``."""
    q0_inv = q[0].inverse()
    out = []
    for k in range(n):
        acc = p.get(k, ZERO)
        for j in range(1, k + 1):
            if j in q:
                acc = acc - q[j] * out[k - j]
        out.append(acc * q0_inv)
    return out


def _proper_partial_fractions(num, factors, mode):
    """Decompose ``num / prod(1 - a z)^m`` for a polynomial ``num``."""
    acc: dict[BasisTerm, Scalar] = {}
    full = {0: ONE}
    for a, m in factors:
        full = poly_mul(full, linear_factor(a, m))
    quot, _ = poly_divmod(num, full)
    for e, c in quot.items():
        acc[Monomial(e)] = c
    for a, m in factors:
        cofactor = {0: ONE}
        for b, mb in factors:
            if b != a:
                cofactor = poly_mul(cofactor, linear_factor(b, mb))
        num_w = _substitute_pole_coordinate(num, a)
        cof_w = _substitute_pole_coordinate(cofactor, a)
        # num/(w^m cof) = sum_i g_i w^(i-m)
        for i, g in enumerate(_series_div(num_w, cof_w, m)):
            if not g.is_zero():
                acc[PoleTerm(a, m - i)] = g
    return RationalSeries._canonical(mode, acc)


def partial_fractions(ff: FactoredFraction, mode: str = POWER) -> RationalSeries:
    """Canonical basis form of a factored fraction."""
    check_mode(mode)
    alphas = [a for a, _ in ff.factors]
    if len(set(alphas)) != len(alphas):
        raise SeriesError("factored fraction has repeated pole values")
    num = ff.numerator
    if not num:
        return RationalSeries(mode)
    low = min(num)
    if low >= 0:
        return _proper_partial_fractions(num, ff.factors, mode)
    if mode == POWER:
        raise SeriesError("negative numerator exponent in power mode")
    # num = z^low * p(z); split off the principal part at 0
    s = -low
    p = {e + s: c for e, c in num.items()}
    q = ff.denominator()
    head = _series_div(p, q, s)
    acc: dict[BasisTerm, Scalar] = {Monomial(n - s): c for n, c in enumerate(head)}
    # (p - q*head)/z^s is a polynomial
    rest = poly_add(p, {e: -c for e, c in poly_mul(q, dict(enumerate(head))).items()})
    rest = {e - s: c for e, c in rest.items()}
    tail = _proper_partial_fractions(rest, ff.factors, mode)
    for t, c in tail._terms.items():
        acc[t] = acc[t] + c if t in acc else c
    return RationalSeries._canonical(mode, acc)


def cauchy_mul(f: RationalSeries, g: RationalSeries) -> RationalSeries:
    """Ordinary product ``f*g`` via factored forms and partial fractions."""
    mode = same_mode(f, g)
    if f.is_zero() or g.is_zero():
        return RationalSeries(mode)
    ff, gg = to_factored(f), to_factored(g)
    mult: dict[Scalar, int] = {}
    for a, m in ff.factors + gg.factors:
        mult[a] = mult.get(a, 0) + m
    prod = FactoredFraction(poly_mul(ff.numerator, gg.numerator), tuple(mult.items()))
    return partial_fractions(prod, mode)
