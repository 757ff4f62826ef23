"""Scalar fields: exact rationals, Q(sqrt5) and binary floats."""
from __future__ import annotations

import math
from fractions import Fraction
from math import isqrt
from typing import Any, Iterable, List, Tuple, Union

from nonassoclab.const import FLOAT, QSQRT5, RATIONAL, ScalarField
from nonassoclab.helper.exceptions import ParseError, ScalarFieldMismatch

from .qsqrt5 import SQRT5, QSqrt5

Scalar = Union[Fraction, QSqrt5, float]
ExactScalar = Union[Fraction, QSqrt5]

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)

_FIELD_RANK = {RATIONAL: 0, QSQRT5: 1}


def field_of(value: Any) -> ScalarField:
    if isinstance(value, QSqrt5):
        return QSQRT5
    if isinstance(value, float):
        return FLOAT
    if isinstance(value, (int, Fraction)):
        return RATIONAL
    raise TypeError(f"Unsupported scalar type {type(value).__name__}")


def join_fields(*fields: ScalarField) -> ScalarField:
    """Smallest field containing all arguments.

    Only Q -> Q(sqrt5) is applied implicitly, exact and float never mix.
    """
    fields = tuple(fields)
    if not fields:
        return RATIONAL
    if FLOAT in fields:
        if all(f == FLOAT for f in fields):
            return FLOAT
        raise ScalarFieldMismatch(
            f"Cannot combine exact and float scalars ({', '.join(sorted(set(fields)))})"
        )
    return max(fields, key=lambda f: _FIELD_RANK[f])


def field_of_all(values: Iterable[Any]) -> ScalarField:
    seen = {field_of(v) for v in values}
    return join_fields(*seen) if seen else RATIONAL


def is_exact(field: ScalarField) -> bool:
    return field != FLOAT


def zero_of(field: ScalarField) -> Scalar:
    return 0.0 if field == FLOAT else ZERO


def one_of(field: ScalarField) -> Scalar:
    return 1.0 if field == FLOAT else ONE


def to_float(value: Scalar) -> float:
    return float(value)


def convert(value: Scalar, field: ScalarField) -> Scalar:
    """Explicit conversion into `field`."""
    if field == FLOAT:
        return float(value)
    if isinstance(value, float):
        raise ScalarFieldMismatch("A float scalar has no exact counterpart")
    if field == QSQRT5:
        return QSqrt5.coerce(value)
    if isinstance(value, QSqrt5):
        if not value.is_rational:
            raise ScalarFieldMismatch(f"{value} is not rational")
        return value.p
    return Fraction(value)


def simplify(value: Scalar) -> Scalar:
    if isinstance(value, QSqrt5):
        return value.simplify()
    if isinstance(value, int):
        return Fraction(value)
    return value


def normalize_coeffs(coeffs: Iterable[Any]) -> Tuple[Scalar, ...]:
    """Coefficient tuple in one field.

    Exact zeros next to floats become 0.0, any other exact value next to a
    float raises ScalarFieldMismatch.
    """
    values = [Fraction(v) if isinstance(v, int) else v for v in coeffs]
    if not any(isinstance(v, float) for v in values):
        return tuple(values)
    out = []
    for v in values:
        if isinstance(v, float):
            out.append(v)
        elif v == 0:
            out.append(0.0)
        else:
            raise ScalarFieldMismatch(
                f"Exact coefficient {v} mixed with floats; convert explicitly"
            )
    return tuple(out)


def is_zero(value: Scalar, tol: float = 0.0) -> bool:
    if isinstance(value, float):
        return abs(value) <= tol
    return value == 0


def scalar_sign(value: Scalar, tol: float = 0.0) -> int:
    if isinstance(value, float):
        if abs(value) <= tol:
            return 0
        return 1 if value > 0 else -1
    if isinstance(value, QSqrt5):
        return value.sign()
    return (value > 0) - (value < 0)


def magnitude(value: Scalar) -> float:
    return abs(float(value))


def parse_rational(raw: Any, location: str = "") -> Fraction:
    """Parse "p/q", an integer or an integer string into a Fraction."""
    if isinstance(raw, bool):
        raise ParseError(f"Boolean {raw!r} is not a rational", location)
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, Fraction):
        return raw
    if isinstance(raw, str):
        text = raw.strip()
        num, _, den = text.partition("/")
        try:
            numerator = int(num)
            denominator = int(den) if den else 1
        except ValueError as err:
            raise ParseError(f"Malformed rational {raw!r}", location) from err
        if denominator == 0:
            raise ParseError(f"Zero denominator in {raw!r}", location)
        return Fraction(numerator, denominator)
    raise ParseError(
        f"Expected a rational string 'p/q', got {type(raw).__name__}", location
    )


def parse_scalar(raw: Any, location: str = "") -> ExactScalar:
    """Parse a rational or a ["p/q", "r/s"] pair meaning p/q + (r/s)sqrt5."""
    if isinstance(raw, (list, tuple)):
        if len(raw) != 2:
            raise ParseError(
                f"Q(sqrt5) scalar needs two entries, got {len(raw)}", location
            )
        value = QSqrt5(
            parse_rational(raw[0], f"{location}[0]"),
            parse_rational(raw[1], f"{location}[1]"),
        )
        return value.simplify()
    if isinstance(raw, float):
        raise ParseError(f"Float {raw!r} given, write it as 'p/q'", location)
    return parse_rational(raw, location)


def _rational_sqrt(value: Fraction) -> Union[Fraction, None]:
    if value < 0:
        return None
    num, den = isqrt(value.numerator), isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


def exact_sqrt(value: Scalar) -> Union[ExactScalar, float, None]:
    """sqrt of a non-negative scalar, exact when it lies in Q(sqrt5).

    Floats give floats, negative values give None, any other exact value
    falls back to a float.
    """
    if isinstance(value, float):
        return math.sqrt(value) if value >= 0 else None
    if isinstance(value, QSqrt5):
        if not value.is_rational:
            return math.sqrt(float(value)) if value.sign() >= 0 else None
        value = value.p
    value = Fraction(value)
    if value < 0:
        return None
    root = _rational_sqrt(value)
    if root is not None:
        return root
    root = _rational_sqrt(value / 5)
    if root is not None:
        return QSqrt5(0, root)
    return math.sqrt(value)


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_scalar(value: Scalar) -> Union[str, List[str], float]:
    """Serialisable form; exact values stay strings so reports are reproducible."""
    if isinstance(value, float):
        return value
    if isinstance(value, QSqrt5):
        if value.is_rational:
            return format_rational(value.p)
        return [format_rational(value.p), format_rational(value.q)]
    return format_rational(Fraction(value))


def format_scalar_text(value: Scalar) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(simplify(value))


__all__ = [
    "SQRT5",
    "QSqrt5",
    "Scalar",
    "ExactScalar",
    "ZERO",
    "ONE",
    "HALF",
    "field_of",
    "field_of_all",
    "join_fields",
    "is_exact",
    "zero_of",
    "one_of",
    "to_float",
    "convert",
    "simplify",
    "normalize_coeffs",
    "is_zero",
    "scalar_sign",
    "magnitude",
    "exact_sqrt",
    "parse_rational",
    "parse_scalar",
    "format_rational",
    "format_scalar",
    "format_scalar_text",
]
