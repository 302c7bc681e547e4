"""Tokenizer and recursive-descent parser for series expressions.

Grammar (whitespace is insignificant)::

    expr    := term (('+' | '-') term)*
    term    := quot (('*' | '#') quot)*
    quot    := unary ('/' divisor)*
    divisor := '(' '1' ('+'|'-') [coef '*'] 'z' ')' ['^' int]  |  unary
    unary   := ('-' | '+') unary | power
    power   := atom ['^' int]
    atom    := NUMBER | 'i' | 'z' | STRING | '(' expr ')' | NAME '(' args ')'

``*`` is the Cauchy product and ``#`` the Hadamard product; both are left
associative with equal precedence.  Division binds tighter so that
``c/(1-a*z)^m`` reads as a single pole term.  Input starting with ``{`` is
taken as the JSON series form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .scalar import ONE, Scalar, coerce


class ExpressionError(Exception):
    def __init__(self, message: str, pos: int | None = None):
        self.message = message
        self.pos = pos
        where = f" at column {pos + 1}" if pos is not None else ""
        super().__init__(f"{message}{where}")


class ParseSyntaxError(ExpressionError):
    """Malformed input; exit code 1 on the command line."""


class SemanticError(ExpressionError):
    """Well-formed input with an invalid meaning; exit code 2."""


# -- AST -----------------------------------------------------------------------

@dataclass(frozen=True)
class Node:
    pos: int = field(default=0, compare=False, kw_only=True)


@dataclass(frozen=True)
class Num(Node):
    value: int


@dataclass(frozen=True)
class Imag(Node):
    pass


@dataclass(frozen=True)
class Z(Node):
    pass


@dataclass(frozen=True)
class Str(Node):
    text: str


@dataclass(frozen=True)
class Neg(Node):
    operand: Node


@dataclass(frozen=True)
class Pow(Node):
    base: Node
    exponent: int


@dataclass(frozen=True)
class BinOp(Node):
    op: str
    left: Node
    right: Node


@dataclass(frozen=True)
class PoleDen(Node):
    """The divisor ``(1 - alpha*z)^mult``."""

    alpha: Scalar
    mult: int


@dataclass(frozen=True)
class Call(Node):
    name: str
    args: tuple[Node, ...]


@dataclass(frozen=True)
class Literal(Node):
    """A value given directly, e.g. a series read from JSON."""

    value: object


FUNCTIONS = {
    "d": (1, 1),
    "x": (1, 1),
    "diag": (2, 2),
    "dilate": (2, 2),
    "coeff": (2, 2),
    "expand": (1, 2),
    "no": (1, 1),
    "apply": (2, 2),
}


# -- tokens --------------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<str>"[^"]*")
  | (?P<op>[-+*#/^(),])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos] == '"':
                raise ParseSyntaxError("unterminated string", pos)
            raise ParseSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


# -- parser --------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def at(self, text: str) -> bool:
        return self.tok.kind in ("op", "name", "num") and self.tok.text == text

    def take(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        if not self.at(text):
            found = self.tok.text or "end of input"
            raise ParseSyntaxError(f"expected {text!r}, found {found!r}", self.tok.pos)
        return self.take()

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseSyntaxError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.take()
            node = BinOp(op.text, node, self.term(), pos=op.pos)
        return node

    def term(self) -> Node:
        node = self.quot()
        while self.at("*") or self.at("#"):
            op = self.take()
            node = BinOp(op.text, node, self.quot(), pos=op.pos)
        return node

    def quot(self) -> Node:
        node = self.unary()
        while self.at("/"):
            op = self.take()
            node = BinOp("/", node, self.divisor(), pos=op.pos)
        return node

    def divisor(self) -> Node:
        start = self.i
        try:
            den = self.pole_den()
        except ParseSyntaxError:
            den = None
        if den is not None:
            return den
        self.i = start
        return self.unary()

    def pole_den(self) -> Node | None:
        pos = self.tok.pos
        self.expect("(")
        self.expect("1")
        if not (self.at("+") or self.at("-")):
            return None
        sign = self.take().text
        alpha_pos = self.tok.pos
        if self.at("z"):
            alpha = ONE
        else:
            alpha = self.coef()
        self.expect("z")
        self.expect(")")
        mult = 1
        mult_pos = self.tok.pos
        if self.at("^"):
            self.take()
            mult_pos = self.tok.pos
            mult = self.integer()
        if sign == "+":
            alpha = -alpha
        if alpha.is_zero():
            raise SemanticError("zero pole value in 1/(1-c*z)", alpha_pos)
        if mult < 1:
            raise SemanticError(f"pole multiplicity must be positive, got {mult}", mult_pos)
        return PoleDen(alpha, mult, pos=pos)

    def coef(self) -> Scalar:
        # factor (('*'|'/') factor)* '*', stopping right before 'z'
        value = self.coef_factor()
        while True:
            if self.at("*") and self.peek().text == "z" and self.peek().kind == "name":
                self.take()
                return value
            if self.at("*"):
                self.take()
                value = value * self.coef_factor()
            elif self.at("/"):
                div_pos = self.take().pos
                d = self.coef_factor()
                if d.is_zero():
                    raise SemanticError("division by zero", div_pos)
                value = value / d
            else:
                raise ParseSyntaxError(f"expected '*z' in pole factor, found {self.tok.text!r}",
                                       self.tok.pos)

    def coef_factor(self) -> Scalar:
        if self.tok.kind == "num":
            return coerce(int(self.take().text))
        if self.at("i"):
            self.take()
            return Scalar(0, 1)
        if self.at("("):
            start = self.tok.pos
            self.take()
            node = self.expr()
            self.expect(")")
            return constant_scalar(node, start)
        raise ParseSyntaxError(f"expected a scalar, found {self.tok.text!r}", self.tok.pos)

    def integer(self) -> int:
        sign = 1
        if self.at("("):
            self.take()
            n = self.integer()
            self.expect(")")
            return n
        if self.at("-") or self.at("+"):
            sign = -1 if self.take().text == "-" else 1
        if self.tok.kind != "num":
            raise ParseSyntaxError(f"expected an integer, found {self.tok.text!r}", self.tok.pos)
        return sign * int(self.take().text)

    def unary(self) -> Node:
        if self.at("-"):
            op = self.take()
            return Neg(self.unary(), pos=op.pos)
        if self.at("+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Node:
        node = self.atom()
        if self.at("^"):
            op = self.take()
            node = Pow(node, self.integer(), pos=op.pos)
        return node

    def atom(self) -> Node:
        t = self.tok
        if t.kind == "num":
            self.take()
            return Num(int(t.text), pos=t.pos)
        if t.kind == "str":
            self.take()
            return Str(t.text[1:-1], pos=t.pos)
        if t.kind == "name":
            self.take()
            if self.at("("):
                return self.call(t)
            if t.text == "z":
                return Z(pos=t.pos)
            if t.text == "i":
                return Imag(pos=t.pos)
            raise ParseSyntaxError(f"unknown name {t.text!r}", t.pos)
        if self.at("("):
            self.take()
            node = self.expr()
            self.expect(")")
            return node
        found = t.text or "end of input"
        raise ParseSyntaxError(f"unexpected {found!r}", t.pos)

    def call(self, name: Token) -> Node:
        if name.text not in FUNCTIONS:
            raise ParseSyntaxError(f"unknown function {name.text!r}", name.pos)
        self.expect("(")
        args = [self.expr()]
        while self.at(","):
            self.take()
            args.append(self.expr())
        self.expect(")")
        lo, hi = FUNCTIONS[name.text]
        if not lo <= len(args) <= hi:
            want = str(lo) if lo == hi else f"{lo} or {hi}"
            raise ParseSyntaxError(f"{name.text}() takes {want} argument(s), got {len(args)}",
                                   name.pos)
        return Call(name.text, tuple(args), pos=name.pos)


def constant_scalar(node: Node, pos: int) -> Scalar:
    """Fold a purely scalar subexpression (numbers, ``i``, + - * / ^)."""
    if isinstance(node, Num):
        return coerce(node.value)
    if isinstance(node, Imag):
        return Scalar(0, 1)
    if isinstance(node, Neg):
        return -constant_scalar(node.operand, pos)
    if isinstance(node, Pow):
        base = constant_scalar(node.base, pos)
        if base.is_zero() and node.exponent < 0:
            raise SemanticError("division by zero", node.pos)
        return base ** node.exponent
    if isinstance(node, BinOp) and node.op in "+-*/":
        a = constant_scalar(node.left, pos)
        b = constant_scalar(node.right, pos)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if b.is_zero():
            raise SemanticError("division by zero", node.pos)
        return a / b
    raise ParseSyntaxError("expected a scalar expression", pos)


def parse(text: str) -> Node:
    """Parse an expression, or a JSON series if the input starts with ``{``."""
    if text.lstrip().startswith("{"):
        from .printing import series_from_json
        from .series import SeriesError
        try:
            return Literal(series_from_json(text))
        except ValueError as exc:
            if isinstance(exc, SeriesError):
                raise SemanticError(str(exc)) from None
            raise ParseSyntaxError(f"invalid JSON: {exc}") from None
    return _Parser(text).parse()
