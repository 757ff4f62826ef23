"""Exact arithmetic in the real quadratic field Q(sqrt5)."""
from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering
from numbers import Rational
from typing import Union

from nonassoclab.helper.exceptions import ScalarFieldMismatch

SQRT5 = math.sqrt(5)

ExactOperand = Union[int, Fraction, "QSqrt5"]


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


@total_ordering
class QSqrt5:
    """Number p + q*sqrt5 with rational p and q."""

    __slots__ = ("_p", "_q")

    def __init__(self, p: Rational | int = 0, q: Rational | int = 0) -> None:
        self._p = Fraction(p)
        self._q = Fraction(q)

    @property
    def p(self) -> Fraction:
        return self._p

    @property
    def q(self) -> Fraction:
        return self._q

    @classmethod
    def coerce(cls, other: object) -> QSqrt5:
        if isinstance(other, QSqrt5):
            return other
        if isinstance(other, (int, Fraction)):
            return cls(other, 0)
        if isinstance(other, float):
            raise ScalarFieldMismatch(
                "float combined with an exact Q(sqrt5) scalar; convert explicitly"
            )
        raise TypeError(f"Cannot use {type(other).__name__} as a Q(sqrt5) scalar")

    @classmethod
    def sqrt5(cls) -> QSqrt5:
        return cls(0, 1)

    @property
    def is_rational(self) -> bool:
        return self._q == 0

    def __repr__(self) -> str:
        return f"QSqrt5({self._p}, {self._q})"

    def __str__(self) -> str:
        if self._q == 0:
            return str(self._p)
        if self._p == 0:
            return f"{self._q}*sqrt5"
        sign = "+" if self._q > 0 else "-"
        return f"{self._p}{sign}{abs(self._q)}*sqrt5"

    def __hash__(self) -> int:
        if self._q == 0:
            return hash(self._p)
        return hash((self._p, self._q))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QSqrt5):
            return self._p == other.p and self._q == other.q
        if isinstance(other, (int, Fraction)):
            return self._q == 0 and self._p == other
        return NotImplemented

    def sign(self) -> int:
        """Exact sign of p + q*sqrt5."""
        sp, sq = _sign(self._p), _sign(self._q)
        if sq == 0:
            return sp
        if sp == 0 or sp == sq:
            return sq
        if self._p * self._p > 5 * self._q * self._q:
            return sp
        return sq

    def __lt__(self, other: ExactOperand) -> bool:
        try:
            return (self - QSqrt5.coerce(other)).sign() < 0
        except TypeError:
            return NotImplemented

    def __bool__(self) -> bool:
        return self._p != 0 or self._q != 0

    def __add__(self, other: ExactOperand) -> QSqrt5:
        other = QSqrt5.coerce(other)
        return QSqrt5(self._p + other.p, self._q + other.q)

    __radd__ = __add__

    def __neg__(self) -> QSqrt5:
        return QSqrt5(-self._p, -self._q)

    def __pos__(self) -> QSqrt5:
        return self

    def __abs__(self) -> QSqrt5:
        return -self if self.sign() < 0 else self

    def __sub__(self, other: ExactOperand) -> QSqrt5:
        return self + (-QSqrt5.coerce(other))

    def __rsub__(self, other: ExactOperand) -> QSqrt5:
        return QSqrt5.coerce(other) - self

    def __mul__(self, other: ExactOperand) -> QSqrt5:
        other = QSqrt5.coerce(other)
        return QSqrt5(
            self._p * other.p + 5 * self._q * other.q,
            self._p * other.q + self._q * other.p,
        )

    __rmul__ = __mul__

    def conjugate(self) -> QSqrt5:
        """Galois conjugate p - q*sqrt5."""
        return QSqrt5(self._p, -self._q)

    @property
    def norm(self) -> Fraction:
        return self._p * self._p - 5 * self._q * self._q

    def inverse(self) -> QSqrt5:
        norm = self.norm
        if norm == 0:
            raise ZeroDivisionError("QSqrt5 division by zero")
        return QSqrt5(self._p / norm, -self._q / norm)

    def __truediv__(self, other: ExactOperand) -> QSqrt5:
        return self * QSqrt5.coerce(other).inverse()

    def __rtruediv__(self, other: ExactOperand) -> QSqrt5:
        return QSqrt5.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> QSqrt5:
        if exponent < 0:
            return self.inverse() ** -exponent
        result = QSqrt5(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __float__(self) -> float:
        return float(self._p) + float(self._q) * SQRT5

    def simplify(self) -> Union[Fraction, QSqrt5]:
        """Drop to a Fraction when the irrational part vanishes."""
        return self._p if self._q == 0 else self
