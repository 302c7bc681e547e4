"""Text, LaTeX and JSON renderings of every result type."""

from __future__ import annotations

import json

from .hw import NormalForm
from .oracle import TruncatedSeries
from .scalar import Scalar, coerce, format_scalar, format_scalar_latex, parse_scalar
from .series import MODES, Monomial, PoleTerm, RationalSeries, SeriesError

FORMATS = ("text", "latex", "json")


def _compound(c: Scalar) -> bool:
    return c.re_num != 0 and c.im_num != 0


def _coef_text(c: Scalar) -> str:
    s = format_scalar(c)
    return f"({s})" if _compound(c) else s


def _alpha_text(alpha: Scalar) -> str:
    """``1-a*z`` for the pole value ``a``."""
    if _compound(alpha):
        return f"1-({format_scalar(alpha)})*z"
    neg = alpha.re_num < 0 or alpha.im_num < 0
    mag = -alpha if neg else alpha
    body = "z" if mag == 1 else f"{format_scalar(mag)}*z"
    return ("1+" if neg else "1-") + body


def _term_text(term, c: Scalar) -> str:
    if isinstance(term, Monomial):
        if term.exponent == 0:
            return format_scalar(c)
        z = f"z^{term.exponent}"
        if c == 1:
            return z
        if c == -1:
            return "-" + z
        return f"{_coef_text(c)}*{z}"
    power = "" if term.mult == 1 else f"^{term.mult}"
    return f"{_coef_text(c)}/({_alpha_text(term.alpha)}){power}"


def format_series(f: RationalSeries) -> str:
    if f.is_zero():
        return "0"
    return " + ".join(_term_text(t, c) for t, c in f.items())


def _join_latex(parts):
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def _term_latex(term, c: Scalar) -> str:
    if isinstance(term, Monomial):
        if term.exponent == 0:
            return format_scalar_latex(c)
        z = f"z^{{{term.exponent}}}"
        if c == 1:
            return z
        if c == -1:
            return "-" + z
        cs = format_scalar_latex(c)
        return f"({cs}) {z}" if _compound(c) else f"{cs} {z}"
    a = term.alpha
    if _compound(a):
        den = f"1-({format_scalar_latex(a)})z"
    else:
        neg = a.re_num < 0 or a.im_num < 0
        mag = -a if neg else a
        den = ("1+" if neg else "1-") + ("" if mag == 1 else format_scalar_latex(mag)) + "z"
    sign = ""
    if not _compound(c) and (c.re_num < 0 or c.im_num < 0):
        sign, c = "-", -c
    return f"{sign}\\frac{{{format_scalar_latex(c)}}}{{({den})^{{{term.mult}}}}}"


def format_series_latex(f: RationalSeries) -> str:
    if f.is_zero():
        return "0"
    return _join_latex([_term_latex(t, c) for t, c in f.items()])


def series_to_json(f: RationalSeries) -> dict:
    return {
        "mode": f.mode,
        "monomials": [{"n": t.exponent, "c": format_scalar(c)}
                      for t, c in f.items() if isinstance(t, Monomial)],
        "poles": [{"alpha": format_scalar(t.alpha), "m": t.mult, "c": format_scalar(c)}
                  for t, c in f.items() if isinstance(t, PoleTerm)],
    }


def series_from_json(data) -> RationalSeries:
    """Inverse of :func:`series_to_json`; accepts a dict or a JSON string."""
    if isinstance(data, str):
        data = json.loads(data)
    try:
        mode = data["mode"]
        if mode not in MODES:
            raise SeriesError(f"unknown mode {mode!r}")
        terms = [(Monomial(int(m["n"])), parse_scalar(m["c"])) for m in data.get("monomials", [])]
        for p in data.get("poles", []):
            m = p["m"]
            if not isinstance(m, int):
                raise SeriesError(f"pole multiplicity must be an integer, got {m!r}")
            terms.append((PoleTerm(parse_scalar(p["alpha"]), m), parse_scalar(p["c"])))
    except (KeyError, TypeError) as exc:
        raise SeriesError(f"malformed series JSON: {exc}") from None
    return RationalSeries(mode, terms)


def format_normal_form(x: NormalForm) -> str:
    if x.is_zero():
        return "0"
    parts = []
    for (k, l), c in x.items():
        if k == 0 and l == 0:
            parts.append(format_scalar(c))
            continue
        mono = f"A^{k} a^{l}"
        if c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{_coef_text(c)}*{mono}")
    return " + ".join(parts)


def format_normal_form_latex(x: NormalForm) -> str:
    if x.is_zero():
        return "0"
    parts = []
    for (k, l), c in x.items():
        cs = format_scalar_latex(c)
        if k == 0 and l == 0:
            parts.append(cs)
            continue
        mono = f"(a^\\dagger)^{{{k}}} a^{{{l}}}"
        if c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"({cs}) {mono}" if _compound(c) else f"{cs} {mono}")
    return _join_latex(parts)


def format_truncated(x: TruncatedSeries) -> str:
    return "\n".join(f"{n}\t{format_scalar(c)}" for n, c in x.items())


def format_truncated_latex(x: TruncatedSeries) -> str:
    parts = []
    for n, c in x.items():
        if c.is_zero():
            continue
        parts.append(_term_latex(Monomial(n), c))
    body = _join_latex(parts) if parts else "0"
    return f"{body} + O(z^{{{x.stop}}})"


def render(value, fmt: str = "text") -> str:
    """Render any evaluation result in ``text``, ``latex`` or ``json``."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(value, RationalSeries):
        if fmt == "json":
            return json.dumps(series_to_json(value))
        return format_series_latex(value) if fmt == "latex" else format_series(value)
    if isinstance(value, NormalForm):
        if fmt == "json":
            return json.dumps({"normal_form": [{"k": k, "l": l, "c": format_scalar(c)}
                                               for (k, l), c in value.items()]})
        return format_normal_form_latex(value) if fmt == "latex" else format_normal_form(value)
    if isinstance(value, TruncatedSeries):
        if fmt == "json":
            return json.dumps({"offset": value.offset,
                               "coeffs": [format_scalar(c) for c in value.coeffs]})
        return format_truncated_latex(value) if fmt == "latex" else format_truncated(value)
    c = coerce(value)
    if fmt == "json":
        return json.dumps({"scalar": format_scalar(c)})
    return format_scalar_latex(c) if fmt == "latex" else format_scalar(c)
