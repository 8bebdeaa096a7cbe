from fractions import Fraction

import pytest

from extsq.rational import (
    RationalComplex,
    format_rational,
    parse_rational,
    parse_rational_complex,
)


@pytest.mark.parametrize(
    "text,value",
    [
        ("3/4", Fraction(3, 4)),
        ("-3/4", Fraction(-3, 4)),
        ("0.25", Fraction(1, 4)),
        ("-1.5", Fraction(-3, 2)),
        ("7", Fraction(7)),
        ("0", Fraction(0)),
    ],
)
def test_parse_rational(text, value):
    assert parse_rational(text) == value


def test_parse_rational_rejects_junk():
    for bad in ("", "x", "1/0", "1//2", "1.2.3"):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_format_round_trip():
    for q in (Fraction(3, 7), Fraction(-11, 2), Fraction(5), Fraction(0)):
        assert parse_rational(format_rational(q)) == q


@pytest.mark.parametrize(
    "text,re,im",
    [
        ("1+0i", 1, 0),
        ("0+0.2i", 0, Fraction(1, 5)),
        ("-1/3-2i", Fraction(-1, 3), -2),
        ("i", 0, 1),
        ("-i", 0, -1),
        ("0.5", Fraction(1, 2), 0),
        ("2i", 0, 2),
        ("-3/4+1/2i", Fraction(-3, 4), Fraction(1, 2)),
    ],
)
def test_parse_rational_complex(text, re, im):
    z = parse_rational_complex(text)
    assert z == RationalComplex(re, im)


def test_complex_str_round_trip():
    for z in (
        RationalComplex(Fraction(1, 3), Fraction(-2, 7)),
        RationalComplex(0, 1),
        RationalComplex(-2, 0),
        RationalComplex(0, 0),
    ):
        assert parse_rational_complex(str(z)) == z


def test_from_value_is_exact_on_floats():
    z = RationalComplex.from_value(0.5 - 0.25j)
    assert z == RationalComplex(Fraction(1, 2), Fraction(-1, 4))
    assert RationalComplex.from_value(z) is z
    assert RationalComplex.from_value(3) == RationalComplex(3, 0)
    assert RationalComplex.from_value("1/2+i") == RationalComplex(Fraction(1, 2), 1)


def test_algebra():
    a = RationalComplex(Fraction(1, 2), Fraction(1, 3))
    b = RationalComplex(Fraction(-1, 4), 2)
    assert a + b == RationalComplex(Fraction(1, 4), Fraction(7, 3))
    assert a - b == RationalComplex(Fraction(3, 4), Fraction(-5, 3))
    assert -a == RationalComplex(Fraction(-1, 2), Fraction(-1, 3))
    prod = a * b
    assert complex(prod) == pytest.approx(complex(a) * complex(b))
    assert a.conjugate() == RationalComplex(Fraction(1, 2), Fraction(-1, 3))


def test_predicates_and_hash():
    assert RationalComplex(3, 0).is_real()
    assert RationalComplex(3, 0).is_integer()
    assert not RationalComplex(Fraction(1, 2), 0).is_integer()
    assert not RationalComplex(0, 1).is_real()
    seen = {RationalComplex(1, 2): "a"}
    assert seen[RationalComplex(1, 2)] == "a"
