"""Truncated coefficient windows: the ground truth for every closed formula.

Nothing here touches the multiplication table, the partial-fraction code or
the operator algebra; only scalar arithmetic is shared.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalar import ZERO, Scalar, coerce
from .series import LAURENT, Monomial, PoleTerm, RationalSeries

DEFAULT_DEPTH = 64


class WindowMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of ``z^offset .. z^(offset+len-1)``."""

    offset: int
    coeffs: tuple[Scalar, ...]

    def __post_init__(self):
        coeffs = tuple(coerce(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    def __len__(self):
        return len(self.coeffs)

    @property
    def stop(self) -> int:
        return self.offset + len(self.coeffs)

    def __getitem__(self, n: int) -> Scalar:
        """Coefficient of ``z^n`` (not a list index)."""
        if not self.offset <= n < self.stop:
            raise IndexError(f"z^{n} outside window [{self.offset}, {self.stop})")
        return self.coeffs[n - self.offset]

    def items(self):
        return zip(range(self.offset, self.stop), self.coeffs)


def default_offset(f: RationalSeries) -> int:
    if f.mode != LAURENT:
        return 0
    return min([0] + [t.exponent for t, _ in f.items() if isinstance(t, Monomial)])


def truncate(f: RationalSeries, N: int = DEFAULT_DEPTH, offset: int | None = None) -> TruncatedSeries:
    """Expand ``f`` over ``N`` consecutive exponents.

    Pole terms are expanded with the ratio recurrence
    ``c[n+1] = alpha*c[n]*(n+m)/(n+1)`` rather than per-entry binomials.
    """
    if N < 1:
        raise ValueError("truncation depth must be positive")
    if offset is None:
        offset = default_offset(f)
    stop = offset + N
    out = [ZERO] * N
    for term, c in f.items():
        if isinstance(term, Monomial):
            if offset <= term.exponent < stop:
                out[term.exponent - offset] = out[term.exponent - offset] + c
            continue
        assert isinstance(term, PoleTerm)
        alpha, m = term.alpha, term.mult
        # c[n] = ratio[n] * alpha^n with ratio[n+1] = ratio[n]*(n+m)/(n+1), kept integral
        ratio = 1
        power = c
        for n in range(0, stop):
            if n >= offset:
                out[n - offset] = out[n - offset] + power * ratio
            ratio = ratio * (n + m) // (n + 1)
            power = power * alpha
    return TruncatedSeries(offset, tuple(out))


def from_list(values, offset: int = 0) -> TruncatedSeries:
    return TruncatedSeries(offset, tuple(coerce(v) for v in values))


def _check_windows(x: TruncatedSeries, y: TruncatedSeries):
    if x.offset != y.offset or len(x) != len(y):
        raise WindowMismatchError(
            f"windows differ: [{x.offset}, {x.stop}) vs [{y.offset}, {y.stop})")


def pointwise_mul(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    _check_windows(x, y)
    return TruncatedSeries(x.offset, tuple(a * b for a, b in zip(x.coeffs, y.coeffs)))


def pointwise_add(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    _check_windows(x, y)
    return TruncatedSeries(x.offset, tuple(a + b for a, b in zip(x.coeffs, y.coeffs)))


def convolve(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product of two windows, cut to the input length.

    Both windows must start at the lowest nonzero exponent of their series
    (or below), otherwise the low-order products are incomplete.
    """
    _check_windows(x, y)
    n = len(x)
    out = []
    for k in range(n):
        acc = ZERO
        for j in range(k + 1):
            a, b = x.coeffs[j], y.coeffs[k - j]
            if a and b:
                acc = acc + a * b
        out.append(acc)
    # exponents add, so the product window starts at twice the offset
    return TruncatedSeries(2 * x.offset, tuple(out))


def diff(x: TruncatedSeries) -> TruncatedSeries:
    """Termwise derivative; entry for ``z^n`` becomes ``(n+1)*c[n+1]``.

    The window keeps its offset and loses its top entry.  The dropped
    coefficient ``offset*c[offset]`` of ``z^(offset-1)`` must be zero for the
    result to be exact, which holds in power mode at offset 0.
    """
    if len(x) < 2:
        raise ValueError("window too short to differentiate")
    o = x.offset
    return TruncatedSeries(o, tuple(x.coeffs[k + 1] * (o + k + 1) for k in range(len(x) - 1)))


def shift(x: TruncatedSeries) -> TruncatedSeries:
    """Multiply by ``z``: same window, top coefficient dropped, zero shifted in."""
    return TruncatedSeries(x.offset, (ZERO,) + x.coeffs[:-1])


def restrict(x: TruncatedSeries, offset: int, N: int) -> TruncatedSeries:
    """Sub-window ``[offset, offset+N)`` of ``x``."""
    if offset < x.offset or offset + N > x.stop or N < 1:
        raise WindowMismatchError(
            f"[{offset}, {offset + N}) is not inside [{x.offset}, {x.stop})")
    k = offset - x.offset
    return TruncatedSeries(offset, x.coeffs[k:k + N])
