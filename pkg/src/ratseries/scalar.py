"""Exact Gaussian-rational scalars and the combinatorial helpers built on them.

A :class:`Scalar` is ``re_num/re_den + (im_num/im_den)*i`` with both fractions
kept in lowest terms and positive denominators, so equality is structural.
Plain rationals are the scalars whose imaginary part is zero.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational


def _reduce(num: int, den: int) -> tuple[int, int]:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if num == 0:
        return 0, 1
    if den < 0:
        num, den = -num, -den
    g = gcd(num, den)
    if g != 1:
        num //= g
        den //= g
    return num, den


def _add(an, ad, bn, bd):
    if ad == bd:
        return _reduce(an + bn, ad)
    return _reduce(an * bd + bn * ad, ad * bd)


def _mul(an, ad, bn, bd):
    if an == 0 or bn == 0:
        return 0, 1
    return _reduce(an * bn, ad * bd)


class Scalar:
    """An element of Q(i).

    Instances are immutable and hashable.  Python ints, ``Fraction`` and
    other ``Scalar`` values mix freely in arithmetic.
    """

    __slots__ = ("_rn", "_rd", "_in", "_id", "_hash")

    def __init__(self, re=0, im=0):
        if isinstance(re, Scalar):
            if im != 0:
                raise TypeError("real part must be rational when im is given")
            self._rn, self._rd, self._in, self._id = re._rn, re._rd, re._in, re._id
        else:
            r, i = Fraction(re), Fraction(im)
            self._rn, self._rd = r.numerator, r.denominator
            self._in, self._id = i.numerator, i.denominator
        self._hash = None

    @classmethod
    def _raw(cls, rn, rd, im_n, im_d) -> Scalar:
        # caller guarantees canonical form
        obj = object.__new__(cls)
        obj._rn = rn
        obj._rd = rd
        obj._in = im_n
        obj._id = im_d
        obj._hash = None
        return obj

    re_num = property(lambda self: self._rn)
    re_den = property(lambda self: self._rd)
    im_num = property(lambda self: self._in)
    im_den = property(lambda self: self._id)

    # -- accessors ---------------------------------------------------------

    @property
    def real(self) -> Fraction:
        return Fraction(self._rn, self._rd)

    @property
    def imag(self) -> Fraction:
        return Fraction(self._in, self._id)

    def is_zero(self) -> bool:
        return self._rn == 0 and self._in == 0

    def is_rational(self) -> bool:
        return self._in == 0

    def is_integer(self) -> bool:
        return self._in == 0 and self._rd == 1

    def sort_key(self) -> tuple[Fraction, Fraction]:
        """Lexicographic (real, imaginary) order used for canonical output."""
        return (self.real, self.imag)

    def conjugate(self) -> Scalar:
        return Scalar._raw(self._rn, self._rd, -self._in, self._id)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        o = coerce(other, strict=False)
        if o is NotImplemented:
            return o
        rn, rd = _add(self._rn, self._rd, o._rn, o._rd)
        im_n, im_d = _add(self._in, self._id, o._in, o._id)
        return Scalar._raw(rn, rd, im_n, im_d)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(-self._rn, self._rd, -self._in, self._id)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = coerce(other, strict=False)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = coerce(other, strict=False)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = coerce(other, strict=False)
        if o is NotImplemented:
            return o
        a, b, c, d = self._rn, self._rd, self._in, self._id
        e, f, g, h = o._rn, o._rd, o._in, o._id
        if c == 0 and g == 0:
            rn, rd = _mul(a, b, e, f)
            return Scalar._raw(rn, rd, 0, 1)
        # (x + yi)(u + vi) = (xu - yv) + (xv + yu)i
        xu = _mul(a, b, e, f)
        yv = _mul(c, d, g, h)
        xv = _mul(a, b, g, h)
        yu = _mul(c, d, e, f)
        rn, rd = _add(xu[0], xu[1], -yv[0], yv[1])
        im_n, im_d = _add(xv[0], xv[1], yu[0], yu[1])
        return Scalar._raw(rn, rd, im_n, im_d)

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        if self._in == 0:
            rn, rd = _reduce(self._rd, self._rn)
            return Scalar._raw(rn, rd, 0, 1)
        # 1/(x + yi) = (x - yi)/(x^2 + y^2)
        x, y = self.real, self.imag
        norm = x * x + y * y
        return Scalar(x / norm, -y / norm)

    def __truediv__(self, other):
        o = coerce(other, strict=False)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = coerce(other, strict=False)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        o = coerce(other, strict=False)
        if o is NotImplemented:
            return NotImplemented
        return (self._rn == o._rn and self._rd == o._rd
                and self._in == o._in and self._id == o._id)

    def __hash__(self):
        h = self._hash
        if h is None:
            if self._in == 0:
                # agree with hash(int) / hash(Fraction) for real values
                h = hash(Fraction(self._rn, self._rd))
            else:
                h = hash((self._rn, self._rd, self._in, self._id))
            self._hash = h
        return h

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


ZERO = Scalar._raw(0, 1, 0, 1)
ONE = Scalar._raw(1, 1, 0, 1)
I = Scalar._raw(0, 1, 1, 1)


def coerce(x, strict=True):
    """Convert ints, Fractions and Scalars to :class:`Scalar`."""
    if type(x) is Scalar or isinstance(x, Scalar):
        return x
    if isinstance(x, bool):
        pass
    elif isinstance(x, int):
        return Scalar._raw(x, 1, 0, 1)
    elif isinstance(x, Rational):
        return Scalar._raw(x.numerator, x.denominator, 0, 1)
    if strict:
        raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")
    return NotImplemented


# -- the scalar_arith dispatch -------------------------------------------------

def scalar_arith(op: str, x, y=None):
    """Apply a named field operation; ``neg`` and ``inv`` ignore ``y``."""
    x = coerce(x)
    if op == "neg":
        return -x
    if op == "inv":
        return x.inverse()
    y = coerce(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    if op == "eq":
        return x == y
    raise ValueError(f"unknown scalar operation {op!r}")


# -- combinatorial helpers -----------------------------------------------------

def binomial(n: int, k: int) -> Scalar:
    """Generalized binomial ``n(n-1)...(n-k+1)/k!``; ``n`` may be negative."""
    if k < 0:
        raise ValueError("binomial lower argument must be >= 0")
    if 0 <= n < k:
        return ZERO
    num = 1
    den = 1
    for t in range(k):
        num *= n - t
        den *= t + 1
    return Scalar._raw(num // den, 1, 0, 1)


def rising_factorial(x, j: int) -> Scalar:
    """``x(x+1)...(x+j-1)``, equal to 1 for ``j == 0``."""
    if j < 0:
        raise ValueError("rising factorial order must be >= 0")
    x = coerce(x)
    result = ONE
    for t in range(j):
        result = result * (x + t)
    return result


def falling_factorial(x, j: int) -> Scalar:
    """``x(x-1)...(x-j+1)``, equal to 1 for ``j == 0``."""
    if j < 0:
        raise ValueError("falling factorial order must be >= 0")
    x = coerce(x)
    result = ONE
    for t in range(j):
        result = result * (x - t)
    return result


def factorial(n: int) -> Scalar:
    return rising_factorial(1, n)


# -- text syntax ---------------------------------------------------------------

def _frac_text(num: int, den: int) -> str:
    return str(num) if den == 1 else f"{num}/{den}"


def format_scalar(x: Scalar) -> str:
    """Canonical text: real part first, reduced fractions, ``i`` suffix.

    >>> format_scalar(Scalar(Fraction(3, 2), Fraction(1, 2)))
    '3/2+1/2*i'
    """
    if x.im_num == 0:
        return _frac_text(x.re_num, x.re_den)
    mag_num = abs(x.im_num)
    if mag_num == 1 and x.im_den == 1:
        imag = "i"
    else:
        imag = _frac_text(mag_num, x.im_den) + "*i"
    sign = "-" if x.im_num < 0 else "+"
    if x.re_num == 0:
        return imag if sign == "+" else "-" + imag
    return _frac_text(x.re_num, x.re_den) + sign + imag


def format_scalar_latex(x: Scalar) -> str:
    def frac(num, den):
        if den == 1:
            return str(num)
        sign = "-" if num < 0 else ""
        return f"{sign}\\frac{{{abs(num)}}}{{{den}}}"

    if x.im_num == 0:
        return frac(x.re_num, x.re_den)
    mag = "" if (abs(x.im_num) == 1 and x.im_den == 1) else frac(abs(x.im_num), x.im_den)
    imag = mag + "i"
    sign = "-" if x.im_num < 0 else "+"
    if x.re_num == 0:
        return imag if sign == "+" else "-" + imag
    return frac(x.re_num, x.re_den) + sign + imag


_TERM = re.compile(r"\s*([+-]?)\s*(\d+)?\s*(?:/\s*(\d+))?\s*(\*?\s*i)?\s*")


def parse_scalar(text: str) -> Scalar:
    """Parse the scalar syntax emitted by :func:`format_scalar`.

    Accepts sums of terms ``p``, ``p/q``, ``i``, ``p/q*i`` with optional
    signs, e.g. ``3/2+1/2*i`` or ``-i``.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty scalar")
    pos = 0
    total = ZERO
    seen = False
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"bad scalar syntax: {text!r}")
        sign, num, den, imag = m.groups()
        if num is None and imag is None:
            raise ValueError(f"bad scalar syntax: {text!r}")
        if num is None and den is not None:
            raise ValueError(f"bad scalar syntax: {text!r}")
        if seen and not sign:
            raise ValueError(f"bad scalar syntax: {text!r}")
        value = Fraction(int(num) if num else 1, int(den) if den else 1)
        if sign == "-":
            value = -value
        total = total + (Scalar(0, value) if imag else Scalar(value))
        seen = True
        pos = m.end()
    return total
