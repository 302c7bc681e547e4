"""Heisenberg-Weyl algebra in the normally ordered basis ``A^k a^l``.

``a`` lowers and ``A`` raises; the single relation is ``a A - A a = 1``.
Words are plain strings over ``"aA"``.  The Bargmann-Fock action sends
``a`` to ``d/dz`` and ``A`` to multiplication by ``z``.
"""

from __future__ import annotations

import enum
from typing import Iterable, Mapping, Union

from .scalar import ONE, Scalar, binomial, coerce, factorial
from .series import Monomial, PoleTerm, RationalSeries, pole

LOWER = "a"
RAISE = "A"


def check_word(word: str) -> str:
    bad = set(word) - {LOWER, RAISE}
    if bad:
        raise ValueError(f"word letters must be 'a' or 'A', got {sorted(bad)}")
    return word


class Degree(enum.Enum):
    """Markers returned by :func:`hw_degree` when no single integer applies."""

    ANY = "any"
    INHOMOGENEOUS = "inhomogeneous"


class NormalForm:
    """Finite combination ``sum c[k, l] A^k a^l`` with no zero coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], object] | Iterable = ()):
        acc: dict[tuple[int, int], Scalar] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (k, l), c in items:
            if k < 0 or l < 0:
                raise ValueError("normal-form exponents must be >= 0")
            c = coerce(c)
            acc[(k, l)] = acc[(k, l)] + c if (k, l) in acc else c
        self._terms = {kl: c for kl, c in sorted(acc.items(), key=_order_key) if not c.is_zero()}

    @classmethod
    def monomial(cls, k: int, l: int, c=ONE) -> NormalForm:
        return cls([((k, l), c)])

    @classmethod
    def identity(cls) -> NormalForm:
        return cls.monomial(0, 0)

    @property
    def terms(self) -> dict[tuple[int, int], Scalar]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        return NormalForm(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self):
        return NormalForm({kl: -c for kl, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, NormalForm):
            return hw_mul(self, other)
        try:
            c = coerce(other)
        except TypeError:
            return NotImplemented
        return NormalForm({kl: c * v for kl, v in self._terms.items()})

    def __rmul__(self, other):
        try:
            c = coerce(other)
        except TypeError:
            return NotImplemented
        return NormalForm({kl: c * v for kl, v in self._terms.items()})

    def __pow__(self, n: int):
        result = NormalForm.identity()
        for _ in range(n):
            result = hw_mul(result, self)
        return result

    def __repr__(self):
        from .printing import format_normal_form
        return f"NormalForm({format_normal_form(self)!r})"


def _order_key(item):
    (k, l), _ = item
    return (-(k + l), -k)


def word_to_normal_form(word: str) -> NormalForm:
    """A word that is already normally ordered, as a single monomial."""
    check_word(word)
    if RAISE in word.lstrip(RAISE):
        raise ValueError(f"word {word!r} is not normally ordered")
    k = len(word) - len(word.lstrip(RAISE))
    return NormalForm.monomial(k, len(word) - k)


def normal_order(word: str) -> NormalForm:
    """Normal form of a word by repeated rewriting ``aA -> Aa + 1``."""
    check_word(word)
    pending: dict[str, Scalar] = {word: ONE}
    done: dict[tuple[int, int], Scalar] = {}
    while pending:
        nxt: dict[str, Scalar] = {}
        for w, c in pending.items():
            pos = w.find(LOWER + RAISE)
            if pos < 0:
                k = len(w) - len(w.lstrip(RAISE))
                kl = (k, len(w) - k)
                done[kl] = done[kl] + c if kl in done else c
                continue
            for rewritten in (w[:pos] + RAISE + LOWER + w[pos + 2:], w[:pos] + w[pos + 2:]):
                nxt[rewritten] = nxt[rewritten] + c if rewritten in nxt else c
        pending = {w: c for w, c in nxt.items() if not c.is_zero()}
    return NormalForm(done)


def hw_mul(x: NormalForm, y: NormalForm) -> NormalForm:
    """Normally ordered product.

    Uses ``a^l A^k = sum_i i! C(l,i) C(k,i) A^(k-i) a^(l-i)`` termwise.
    """
    acc: dict[tuple[int, int], Scalar] = {}
    for (k1, l1), c1 in x.items():
        for (k2, l2), c2 in y.items():
            c = c1 * c2
            for i in range(min(l1, k2) + 1):
                w = factorial(i) * binomial(l1, i) * binomial(k2, i) * c
                kl = (k1 + k2 - i, l1 + l2 - i)
                acc[kl] = acc[kl] + w if kl in acc else w
    return NormalForm(acc)


def hw_degree(x: NormalForm) -> int | Degree:
    """Common ``k - l`` of all terms, or a :class:`Degree` marker."""
    degrees = {k - l for (k, l) in x._terms}
    if not degrees:
        return Degree.ANY
    if len(degrees) > 1:
        return Degree.INHOMOGENEOUS
    return degrees.pop()


# -- Bargmann-Fock action ------------------------------------------------------

def _lower_term(term, c, acc):
    # d/dz
    if isinstance(term, Monomial):
        n = term.exponent
        if n != 0:
            t = Monomial(n - 1)
            v = c * n
            acc[t] = acc[t] + v if t in acc else v
        return
    t = PoleTerm(term.alpha, term.mult + 1)
    v = c * term.mult * term.alpha
    acc[t] = acc[t] + v if t in acc else v


def _raise_term(term, c, acc):
    # multiplication by z
    if isinstance(term, Monomial):
        t = Monomial(term.exponent + 1)
        acc[t] = acc[t] + c if t in acc else c
        return
    # z/(1-az)^m = (1/(1-az)^m - 1/(1-az)^(m-1))/a
    v = c / term.alpha
    for t, w in ((term, v), (pole(term.alpha, term.mult - 1), -v)):
        acc[t] = acc[t] + w if t in acc else w


def _apply_word(word: str, terms: dict) -> dict:
    for letter in reversed(word):
        step = _lower_term if letter == LOWER else _raise_term
        acc: dict = {}
        for term, c in terms.items():
            if not c.is_zero():
                step(term, c, acc)
        terms = acc
    return terms


Operator = Union[NormalForm, str]


def bf_apply(x: Operator, f: RationalSeries) -> RationalSeries:
    """Bargmann-Fock action of a word or normal form on a rational series.

    A word acts right to left, as operator composition: ``"aA"`` means
    ``d/dz`` applied after multiplication by ``z``.
    """
    if isinstance(x, str):
        check_word(x)
        return RationalSeries._canonical(f.mode, _apply_word(x, dict(f.items())))
    if not isinstance(x, NormalForm):
        raise TypeError(f"cannot apply {type(x).__name__} to a series")
    acc: dict = {}
    lowered: dict[int, dict] = {}
    for (k, l), c in x.items():
        if l not in lowered:
            lowered[l] = _apply_word(LOWER * l, dict(f.items()))
        for t, v in _apply_word(RAISE * k, lowered[l]).items():
            w = c * v
            acc[t] = acc[t] + w if t in acc else w
    return RationalSeries._canonical(f.mode, acc)
