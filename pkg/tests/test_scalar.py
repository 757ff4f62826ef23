from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nonassoclab.helper.exceptions import ParseError, ScalarFieldMismatch
from nonassoclab.scalar import (
    QSqrt5,
    exact_sqrt,
    format_scalar,
    join_fields,
    normalize_coeffs,
    parse_rational,
    parse_scalar,
)

rationals = st.fractions(min_value=-999, max_value=999, max_denominator=50)
qsqrt5 = st.builds(QSqrt5, rationals, rationals)

GOLDEN = QSqrt5(Fraction(1, 2), Fraction(1, 2))


def test_golden_ratio_square():
    assert GOLDEN * GOLDEN == GOLDEN + 1


def test_sign_of_low_golden_value():
    low = QSqrt5(Fraction(1, 2), Fraction(-1, 2))
    assert low.sign() == -1
    assert low < 0
    assert float(low) == pytest.approx(-0.6180339887)


@given(qsqrt5, qsqrt5, qsqrt5)
def test_field_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


@given(qsqrt5)
def test_inverse(a):
    if a:
        assert a * a.inverse() == 1


@given(qsqrt5)
def test_sign_matches_float(a):
    value = float(a)
    if abs(value) > 1e-9:
        assert a.sign() == (1 if value > 0 else -1)


def test_join_fields():
    assert join_fields("rational", "qsqrt5") == "qsqrt5"
    assert join_fields("float", "float") == "float"
    with pytest.raises(ScalarFieldMismatch):
        join_fields("rational", "float")


def test_exact_and_float_never_mix():
    with pytest.raises(ScalarFieldMismatch):
        normalize_coeffs([Fraction(1, 2), 0.5])
    assert normalize_coeffs([0, 0.5]) == (0.0, 0.5)


def test_parse_rational():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational(-2) == Fraction(-2)
    with pytest.raises(ParseError):
        parse_rational("1/0")
    with pytest.raises(ParseError):
        parse_rational("one half")


def test_parse_scalar_pair_and_float():
    assert parse_scalar(["1/2", "-1/2"]) == QSqrt5(Fraction(1, 2), Fraction(-1, 2))
    assert parse_scalar(["3", "0"]) == Fraction(3)
    with pytest.raises(ParseError):
        parse_scalar(0.5)


def test_exact_sqrt():
    assert exact_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert exact_sqrt(Fraction(5)) == QSqrt5(0, 1)
    assert exact_sqrt(Fraction(20, 9)) == QSqrt5(0, Fraction(2, 3))
    assert exact_sqrt(Fraction(-1)) is None
    assert isinstance(exact_sqrt(Fraction(2)), float)


def test_format_scalar():
    assert format_scalar(Fraction(-3, 6)) == "-1/2"
    assert format_scalar(QSqrt5(Fraction(1, 2), Fraction(-1, 2))) == ["1/2", "-1/2"]
    assert format_scalar(QSqrt5(2, 0)) == "2"
    assert format_scalar(0.25) == 0.25
