import json
import random
from fractions import Fraction

import pytest

from ratseries import LAURENT, POWER, Monomial, PoleTerm, RationalSeries, Scalar
from ratseries.evaluator import evaluate, read_series
from ratseries.hw import NormalForm
from ratseries.parser import (BinOp, Call, Num, ParseSyntaxError, PoleDen,
                              SemanticError, Z, parse)
from ratseries.printing import render, series_from_json, series_to_json


def random_series(rng, mode):
    def scalar(allow_zero=True):
        while True:
            re = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            im = Fraction(rng.randint(-3, 3), rng.randint(1, 3)) if rng.random() < 0.4 else 0
            s = Scalar(re, im)
            if allow_zero or not s.is_zero():
                return s

    terms = []
    for _ in range(rng.randint(0, 5)):
        if rng.random() < 0.4:
            lo = -5 if mode == LAURENT else 0
            terms.append((Monomial(rng.randint(lo, 9)), scalar()))
        else:
            terms.append((PoleTerm(scalar(False), rng.randint(1, 5)), scalar()))
    return RationalSeries(mode, terms)


def test_hadamard_node():
    node = parse("1/(1-2*z) # 1/(1-3*z)")
    assert isinstance(node, BinOp) and node.op == "#"
    assert node.left == BinOp("/", Num(1), PoleDen(Scalar(2), 1))
    assert node.right == BinOp("/", Num(1), PoleDen(Scalar(3), 1))


def test_nested_call():
    node = parse("coeff(z^2 # z^2, 2)")
    assert isinstance(node, Call) and node.name == "coeff"
    assert node.args[0].op == "#" and node.args[1] == Num(2)


def test_zero_pole_is_semantic():
    with pytest.raises(SemanticError) as info:
        parse("1/(1-0*z)")
    assert info.value.pos == 5


@pytest.mark.parametrize("text,pos", [
    ("1/(1-2*z", 8), ("z^", 2), ("(1+", 3), ("foo(z)", 0), ("z $ 2", 2),
    ("diag(1)", 0), ('no("aA"', 7), ("1 2", 2), ("", 0),
])
def test_syntax_errors(text, pos):
    with pytest.raises(ParseSyntaxError) as info:
        parse(text)
    assert info.value.pos == pos


@pytest.mark.parametrize("text", ["1/(1-z)^0", "1/(1-z)^-2"])
def test_bad_multiplicity_is_semantic(text):
    with pytest.raises(SemanticError):
        parse(text)


def test_negative_exponent_depends_on_mode():
    node = parse("z^-2")
    with pytest.raises(SemanticError):
        evaluate(node, POWER)
    assert evaluate(node, LAURENT) == RationalSeries(LAURENT, [(Monomial(-2), 1)])


def test_precedence():
    assert parse("1 + z * z") == BinOp("+", Num(1), BinOp("*", Z(), Z()))
    # * and # are left associative with equal precedence
    assert parse("z # z * z") == BinOp("*", BinOp("#", Z(), Z()), Z())
    assert evaluate(parse("(z + 1) # (z + 2)")) == RationalSeries(POWER, [(Monomial(0), 2), (Monomial(1), 1)])


@pytest.mark.parametrize("text,expected", [
    ("1/(1-2*z) # 1/(1-3*z)", "1/(1-6*z)"),
    ('no("aA")', "A^1 a^1 + 1"),
    ("coeff(1/(1-2*z)^2, 3)", "32"),
    ("1/(1-z)^2 # 1/(1-z)^2", "-1/(1-z)^2 + 2/(1-z)^3"),
    ("1/(1-z) * 1/(1-2*z)", "-1/(1-z) + 2/(1-2*z)"),
    ("d(1/(1-2*z))", "2/(1-2*z)^2"),
    ("x(z^3) - z^4", "0"),
    ("diag(1, 1/(1-z))", "1/(1-z)^2"),
    ("dilate(2, 1/(1-3*z))", "1/(1-6*z)"),
    ('no("Aa") * no("Aa")', "A^2 a^2 + A^1 a^1"),
    ('apply(no("Aa"), 1/(1-z))', "-1/(1-z) + 1/(1-z)^2"),
    ("3/2+1/2*i", "3/2+1/2*i"),
    ("1/(1+z)", "1/(1+z)"),
    ("1/(1-(1+i)*z)", "1/(1-(1+i)*z)"),
    ("2*i/(1-i*z)^3", "2*i/(1-i*z)^3"),
    ("(1+z)^2", "1 + 2*z^1 + z^2"),
])
def test_eval_and_print(text, expected):
    assert render(evaluate(parse(text))) == expected


def test_latex():
    assert render(evaluate(parse("1/(1-6*z)")), "latex") == r"\frac{1}{(1-6z)^{1}}"
    assert render(evaluate(parse("-1/(1-z)^2 + 1/2*z^3")), "latex") == \
        r"\frac{1}{2} z^{3} - \frac{1}{(1-z)^{2}}"
    assert render(evaluate(parse('no("aaA")')), "latex") == r"(a^\dagger)^{1} a^{2} + 2 (a^\dagger)^{0} a^{1}"


def test_print_zero():
    assert render(RationalSeries(POWER)) == "0"
    assert render(NormalForm()) == "0"


def test_semantic_type_errors():
    for text in ['no("aA") # no("aA")', 'coeff(z, 1/2)', 'diag(-1, z)', 'dilate(0, z)',
                 'no("ab")', "z / z", "expand(z, 3) + z", 'no(z)', '1/0']:
        with pytest.raises(SemanticError):
            evaluate(parse(text))


def test_mode_mismatch_is_semantic():
    power_json = json.dumps(series_to_json(RationalSeries(POWER, [(Monomial(1), 1)])))
    node = parse(power_json)
    assert evaluate(node, LAURENT).mode == POWER
    with pytest.raises(SemanticError):
        evaluate(BinOp("+", node, Z()), LAURENT)


@pytest.mark.parametrize("mode", [POWER, LAURENT])
def test_text_round_trip(mode):
    rng = random.Random(2024 if mode == POWER else 4202)
    for _ in range(200):
        f = random_series(rng, mode)
        text = render(f)
        assert read_series(text, mode) == f, text


@pytest.mark.parametrize("mode", [POWER, LAURENT])
def test_json_round_trip(mode):
    rng = random.Random(99)
    for _ in range(200):
        f = random_series(rng, mode)
        text = render(f, "json")
        assert series_from_json(text) == f
        assert read_series(text) == f


def test_json_errors():
    with pytest.raises(ParseSyntaxError):
        parse("{not json")
    with pytest.raises(SemanticError):
        parse('{"mode": "power", "poles": [{"alpha": "0", "m": 1, "c": "1"}]}')
    with pytest.raises(SemanticError):
        parse('{"mode": "power", "monomials": [{"n": -1, "c": "1"}]}')


def test_deterministic_output():
    rng = random.Random(5)
    for _ in range(20):
        f = random_series(rng, LAURENT)
        assert render(f) == render(read_series(render(f), LAURENT))
        assert render(f, "json") == render(series_from_json(render(f, "json")), "json")
