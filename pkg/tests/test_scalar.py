from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ratseries.scalar import (I, ONE, ZERO, Scalar, binomial, factorial,
                              format_scalar, parse_scalar, rising_factorial,
                              scalar_arith)

fractions = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)
scalars = st.builds(Scalar, fractions, fractions)
nonzero = scalars.filter(lambda s: not s.is_zero())


def test_add_halves():
    assert scalar_arith("add", Fraction(1, 2), Fraction(1, 2)) == 1


def test_i_squared():
    assert scalar_arith("mul", I, I) == -1


def test_inverse_of_one_plus_i():
    x = Scalar(1, 1)
    inv = scalar_arith("inv", x)
    assert inv == Scalar(Fraction(1, 2), Fraction(-1, 2))
    assert inv * x == ONE


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        scalar_arith("div", ONE, ZERO)
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_canonical_form():
    x = Scalar(Fraction(2, 4), Fraction(-3, -6))
    assert (x.re_num, x.re_den, x.im_num, x.im_den) == (1, 2, 1, 2)
    z = Scalar(5, 3) - Scalar(5, 3)
    assert (z.re_num, z.re_den, z.im_num, z.im_den) == (0, 1, 0, 1)
    assert scalar_arith("eq", z, 0)
    assert hash(Scalar(3)) == hash(3)


@pytest.mark.parametrize("n,k,expected", [(5, 2, 10), (7, 0, 1), (-7, 0, 1), (-3, 2, 6), (3, 5, 0)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_rising_factorial():
    assert rising_factorial(3, 2) == 12
    assert rising_factorial(Scalar(1, 1), 0) == 1
    for j in range(8):
        assert rising_factorial(1, j) == factorial(j)


@pytest.mark.parametrize("n", range(-30, 31))
def test_pascal(n):
    for k in range(1, 31):
        assert binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1)


def test_negative_upper_sign_law():
    for n in range(1, 21):
        for k in range(1, 21):
            assert binomial(-n, k) == (-1) ** k * binomial(n + k - 1, k)


def test_rising_factorial_is_binomial():
    for n in range(31):
        for j in range(31):
            assert rising_factorial(n + 1, j) / factorial(j) == binomial(n + j, j)


@given(scalars, scalars, scalars)
def test_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x - x == ZERO


@given(nonzero, scalars)
def test_inverse_round_trip(x, y):
    assert x * x.inverse() == ONE
    assert (y / x) * x == y


@given(scalars)
def test_text_round_trip(x):
    assert parse_scalar(format_scalar(x)) == x


@pytest.mark.parametrize("x,text", [
    (Scalar(Fraction(3, 2), Fraction(1, 2)), "3/2+1/2*i"),
    (I, "i"), (-I, "-i"), (Scalar(0, 2), "2*i"), (Scalar(1, -1), "1-i"),
    (Scalar(Fraction(-1, 3)), "-1/3"), (ZERO, "0"),
])
def test_format(x, text):
    assert format_scalar(x) == text
