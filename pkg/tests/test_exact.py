from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cevians.errors import DivisionByZero, MalformedNumber, ZeroDenominator
from cevians.exact import as_rational, parse_rational, rational_arith, render, to_decimal

from conftest import rationals


@pytest.mark.parametrize("text, expected", [
    ("2/4", Fraction(1, 2)),
    ("-3", Fraction(-3, 1)),
    ("0/7", Fraction(0, 1)),
    ("+5/10", Fraction(1, 2)),
    ("-6/-0", None),
])
def test_parse_rational(text, expected):
    if expected is None:
        with pytest.raises(MalformedNumber):
            parse_rational(text)
        return
    q = parse_rational(text)
    assert q == expected
    assert (q.numerator, q.denominator) == (expected.numerator, expected.denominator)


def test_zero_is_unique():
    q = parse_rational("0/7")
    assert (q.numerator, q.denominator) == (0, 1)


@pytest.mark.parametrize("text", ["", "1.5", "1/2/3", " 1", "1 /2", "a", "1e3", "--1", "0x10", "1/-2"])
def test_parse_rejects_malformed(text):
    with pytest.raises(MalformedNumber):
        parse_rational(text)


def test_parse_rejects_zero_denominator():
    with pytest.raises(ZeroDenominator):
        parse_rational("3/0")


def test_arith_examples():
    assert rational_arith(Fraction(1, 3), Fraction(1, 6), "add") == Fraction(1, 2)
    assert rational_arith(Fraction(2, 7), Fraction(7, 2), "mul") == 1
    assert rational_arith(Fraction(1, 3), Fraction(2, 5), "cmp") == -1
    assert rational_arith(Fraction(2, 5), Fraction(2, 5), "cmp") == 0
    assert rational_arith(1, Fraction(1, 2), "sub") == Fraction(1, 2)
    with pytest.raises(DivisionByZero):
        rational_arith(1, 0, "div")


def test_floats_are_refused():
    with pytest.raises(TypeError):
        as_rational(0.5)


@given(rationals(), rationals(), rationals())
def test_field_axioms(a, b, c):
    add = lambda x, y: rational_arith(x, y, "add")
    mul = lambda x, y: rational_arith(x, y, "mul")
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    assert add(a, rational_arith(0, a, "sub")) == 0
    if a != 0:
        assert mul(a, rational_arith(1, a, "div")) == 1


@given(rationals(max_abs=10**6, max_den=10**6))
def test_render_parse_roundtrip(q):
    assert parse_rational(render(q)) == q
    assert render(parse_rational(render(q))) == render(q)


@pytest.mark.parametrize("q, places, text", [
    (Fraction(1, 3), 6, "0.333333"),
    (Fraction(2, 3), 6, "0.666667"),
    (Fraction(-1, 8), 2, "-0.12"),
    (Fraction(-1, 10**9), 6, "0.000000"),
    (Fraction(7), 0, "7"),
    (Fraction(360), 6, "360.000000"),
])
def test_to_decimal(q, places, text):
    assert to_decimal(q, places) == text
