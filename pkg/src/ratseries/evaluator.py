"""Evaluation of parsed expressions against the library."""

from __future__ import annotations

from .hadamard import diag_apply, dilate, hadamard
from .hw import NormalForm, bf_apply, check_word, hw_mul, normal_order
from .oracle import (DEFAULT_DEPTH, TruncatedSeries, WindowMismatchError,
                     convolve, pointwise_add, pointwise_mul, truncate)
from .parser import (BinOp, Call, Imag, Literal, Neg, Node, Num, PoleDen, Pow,
                     SemanticError, Str, Z)
from .scalar import ONE, Scalar, coerce
from .series import (POWER, ModeMismatchError, Monomial, RationalSeries,
                     SeriesError, add, cauchy_mul, check_mode, coefficient,
                     constant, pole_series, scale)


class _Evaluator:
    def __init__(self, mode: str, depth: int):
        self.mode = check_mode(mode)
        self.depth = depth

    def fail(self, message: str, node: Node):
        raise SemanticError(message, node.pos)

    def as_series(self, value, node: Node) -> RationalSeries:
        if isinstance(value, RationalSeries):
            return value
        if isinstance(value, Scalar):
            return constant(value, self.mode)
        self.fail(f"expected a series, got {_kind(value)}", node)

    def as_scalar(self, value, node: Node) -> Scalar:
        if isinstance(value, Scalar):
            return value
        if isinstance(value, RationalSeries):
            terms = value.terms
            if not terms:
                return coerce(0)
            if list(terms) == [Monomial(0)]:
                return terms[Monomial(0)]
        self.fail(f"expected a scalar, got {_kind(value)}", node)

    def as_int(self, node: Node, minimum: int | None = None) -> int:
        value = self.as_scalar(self.eval(node), node)
        if not value.is_integer():
            self.fail(f"expected an integer, got {value}", node)
        n = value.re_num
        if minimum is not None and n < minimum:
            self.fail(f"expected an integer >= {minimum}, got {n}", node)
        return n

    def eval(self, node: Node):
        try:
            method = getattr(self, "eval_" + type(node).__name__)
            return method(node)
        except ModeMismatchError as exc:
            raise SemanticError(str(exc), node.pos) from None
        except SeriesError as exc:
            raise SemanticError(str(exc), node.pos) from None
        except ZeroDivisionError:
            raise SemanticError("division by zero", node.pos) from None

    def eval_Num(self, node: Num):
        return coerce(node.value)

    def eval_Imag(self, node: Imag):
        return Scalar(0, 1)

    def eval_Z(self, node: Z):
        return RationalSeries(self.mode, [(Monomial(1), ONE)])

    def eval_Str(self, node: Str):
        self.fail("a string is only allowed as a word argument", node)

    def eval_Literal(self, node: Literal):
        return node.value

    def eval_Neg(self, node: Neg):
        value = self.eval(node.operand)
        if isinstance(value, TruncatedSeries):
            return TruncatedSeries(value.offset, tuple(-c for c in value.coeffs))
        return -value

    def eval_Pow(self, node: Pow):
        n = node.exponent
        if isinstance(node.base, Z):
            if n < 0 and self.mode == POWER:
                self.fail(f"negative exponent z^{n} in power mode", node)
            return RationalSeries(self.mode, [(Monomial(n), ONE)])
        base = self.eval(node.base)
        if isinstance(base, Scalar):
            return base ** n
        if n < 0:
            self.fail("negative powers are only defined for z and scalars", node)
        if isinstance(base, NormalForm):
            return base ** n
        f = self.as_series(base, node.base)
        result = constant(ONE, f.mode)
        for _ in range(n):
            result = cauchy_mul(result, f)
        return result

    def eval_PoleDen(self, node: PoleDen):
        self.fail("(1-c*z)^m may only appear as a divisor", node)

    def eval_BinOp(self, node: BinOp):
        left = self.eval(node.left)
        if node.op == "/":
            return self.divide(left, node)
        right = self.eval(node.right)
        op = node.op
        if isinstance(left, Scalar) and isinstance(right, Scalar):
            if op == "+":
                return left + right
            if op == "-":
                return left - right
            return left * right
        if isinstance(left, NormalForm) or isinstance(right, NormalForm):
            return self.normal_form_op(op, left, right, node)
        if isinstance(left, TruncatedSeries) or isinstance(right, TruncatedSeries):
            return self.window_op(op, left, right, node)
        f = self.as_series(left, node.left)
        g = self.as_series(right, node.right)
        if op == "+":
            return add(f, g)
        if op == "-":
            return add(f, scale(-1, g))
        if op == "*":
            if isinstance(left, Scalar):
                return scale(left, g)
            if isinstance(right, Scalar):
                return scale(right, f)
            return cauchy_mul(f, g)
        return hadamard(f, g)

    def divide(self, left, node: BinOp):
        if isinstance(node.right, PoleDen):
            den = node.right
            if isinstance(left, Scalar):
                return pole_series(den.alpha, den.mult, c=left, mode=self.mode)
            f = self.as_series(left, node.left)
            return cauchy_mul(f, pole_series(den.alpha, den.mult, mode=f.mode))
        right = self.eval(node.right)
        d = self.as_scalar_or_fail(right, node.right,
                                   "can only divide by a scalar or by (1-c*z)^m")
        if d.is_zero():
            self.fail("division by zero", node)
        if isinstance(left, Scalar):
            return left / d
        if isinstance(left, (RationalSeries, NormalForm)):
            return left * d.inverse()
        self.fail(f"cannot divide {_kind(left)}", node)

    def as_scalar_or_fail(self, value, node, message):
        try:
            return self.as_scalar(value, node)
        except SemanticError:
            self.fail(message, node)

    def normal_form_op(self, op, left, right, node):
        if op == "#":
            self.fail("the Hadamard product is not defined on operators", node)
        x = left if isinstance(left, NormalForm) else None
        y = right if isinstance(right, NormalForm) else None
        if op == "*":
            if x is not None and y is not None:
                return hw_mul(x, y)
            if x is not None and isinstance(right, Scalar):
                return x * right
            if y is not None and isinstance(left, Scalar):
                return left * y
            self.fail("an operator can only multiply an operator or a scalar; use apply()", node)
        if x is None:
            x = NormalForm.identity() * self.as_scalar(left, node.left)
        if y is None:
            y = NormalForm.identity() * self.as_scalar(right, node.right)
        return x + y if op == "+" else x - y

    def window_op(self, op, left, right, node):
        if not (isinstance(left, TruncatedSeries) and isinstance(right, TruncatedSeries)):
            self.fail("expanded windows only combine with other windows", node)
        try:
            if op == "#":
                return pointwise_mul(left, right)
            if op == "*":
                return convolve(left, right)
            if op == "+":
                return pointwise_add(left, right)
            neg = TruncatedSeries(right.offset, tuple(-c for c in right.coeffs))
            return pointwise_add(left, neg)
        except WindowMismatchError as exc:
            self.fail(str(exc), node)

    def eval_Call(self, node: Call):
        name, args = node.name, node.args
        if name == "no":
            if not isinstance(args[0], Str):
                self.fail('no() takes a quoted word such as "aA"', args[0])
            return normal_order(self.word(args[0]))
        if name == "apply":
            op = self.word(args[0]) if isinstance(args[0], Str) else self.eval(args[0])
            if not isinstance(op, (str, NormalForm)):
                self.fail("apply() takes a word or a normal form", args[0])
            return bf_apply(op, self.as_series(self.eval(args[1]), args[1]))
        if name in ("d", "x"):
            f = self.as_series(self.eval(args[0]), args[0])
            return bf_apply("a" if name == "d" else "A", f)
        if name == "diag":
            k = self.as_int(args[0], minimum=0)
            return diag_apply(k, self.as_series(self.eval(args[1]), args[1]))
        if name == "dilate":
            c = self.as_scalar(self.eval(args[0]), args[0])
            if c.is_zero():
                self.fail("dilation by zero", args[0])
            return dilate(c, self.as_series(self.eval(args[1]), args[1]))
        if name == "coeff":
            f = self.as_series(self.eval(args[0]), args[0])
            return coefficient(f, self.as_int(args[1]))
        if name == "expand":
            f = self.as_series(self.eval(args[0]), args[0])
            n = self.as_int(args[1], minimum=1) if len(args) > 1 else self.depth
            return truncate(f, n)
        self.fail(f"unknown function {name!r}", node)

    def word(self, node: Str) -> str:
        try:
            return check_word(node.text)
        except ValueError as exc:
            self.fail(str(exc), node)


def _kind(value) -> str:
    if isinstance(value, RationalSeries):
        return "a series"
    if isinstance(value, NormalForm):
        return "an operator"
    if isinstance(value, TruncatedSeries):
        return "an expanded window"
    return "a scalar"


def evaluate(node: Node, mode: str = POWER, depth: int = DEFAULT_DEPTH):
    """Evaluate an expression tree.

    Returns a :class:`Scalar`, :class:`RationalSeries`, :class:`NormalForm`
    or :class:`TruncatedSeries` depending on the top node.  ``depth`` is the
    window length used by ``expand(e)`` without an explicit length.
    """
    return _Evaluator(mode, depth).eval(node)


def read_series(text: str, mode: str = POWER) -> RationalSeries:
    """Parse and evaluate ``text`` as a series; plain scalars become constants."""
    from .parser import parse

    node = parse(text)
    value = evaluate(node, mode)
    if isinstance(value, Scalar):
        return constant(value, mode)
    if not isinstance(value, RationalSeries):
        raise SemanticError(f"expected a series, got {_kind(value)}", node.pos)
    return value
