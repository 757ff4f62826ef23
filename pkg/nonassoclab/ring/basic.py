"""Finite-dimensional real *-algebras given by rational structure constants."""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from nonassoclab.helper.exceptions import ConfigurationException, DimensionMismatch
from nonassoclab.scalar import (
    ONE,
    ZERO,
    Scalar,
    field_of_all,
    format_scalar_text,
    join_fields,
    normalize_coeffs,
    zero_of,
)

_LOGGER = logging.getLogger(__name__)

# (i, j) -> ((k, c_ijk), ...) with zero constants omitted
SparseTable = Dict[Tuple[int, int], Tuple[Tuple[int, Fraction], ...]]


def sparse_product(
    table: SparseTable,
    x: Sequence[Scalar],
    y: Sequence[Scalar],
    dim: int,
    symmetric: bool = False,
) -> List[Scalar]:
    """Bilinear extension of a sparse structure-constant table.

    With `symmetric` only keys (i, j) with i <= j are stored.
    """
    field = join_fields(field_of_all(x), field_of_all(y))
    out: List[Scalar] = [zero_of(field)] * dim
    nz_x = [(i, a) for i, a in enumerate(x) if a != 0]
    nz_y = [(j, b) for j, b in enumerate(y) if b != 0]
    for i, a in nz_x:
        for j, b in nz_y:
            key = (i, j) if not symmetric or i <= j else (j, i)
            terms = table.get(key)
            if not terms:
                continue
            ab = a * b
            for k, c in terms:
                out[k] += ab * c
    return out


class StarRing:
    """Real *-algebra with basis, sparse table, unit and involution matrix."""

    def __init__(
        self,
        name: str,
        dim: int,
        table: SparseTable,
        invol: Sequence[Sequence[Fraction]],
        unit: int = 0,
        labels: Optional[Sequence[str]] = None,
        conventions: Iterable[str] = (),
        gammas: Sequence[int] = (),
    ) -> None:
        if dim < 1:
            raise ConfigurationException(f"Ring dimension must be positive, got {dim}")
        if len(invol) != dim or any(len(row) != dim for row in invol):
            raise DimensionMismatch(f"Involution of {name} must be {dim}x{dim}")
        self._name = name
        self._dim = dim
        self._table = dict(table)
        self._invol = tuple(tuple(Fraction(v) for v in row) for row in invol)
        self._unit = unit
        self._labels = tuple(labels) if labels else default_labels(dim)
        self._conventions = tuple(conventions)
        self._gammas = tuple(gammas)
        # columns of the involution, used by star()
        self._invol_cols = tuple(
            tuple((i, self._invol[i][j]) for i in range(dim) if self._invol[i][j] != 0)
            for j in range(dim)
        )

    @property
    def name(self) -> str:
        return self._name

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def unit(self) -> int:
        return self._unit

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def table(self) -> SparseTable:
        return self._table

    @property
    def invol(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return self._invol

    @property
    def conventions(self) -> Tuple[str, ...]:
        """Construction choices the ring depends on (e.g. tensor involution)."""
        return self._conventions

    @property
    def gammas(self) -> Tuple[int, ...]:
        return self._gammas

    @property
    def mul_table(self) -> List[List[List[Fraction]]]:
        """Dense C[i][j][k]."""
        dense = [[[ZERO] * self._dim for _ in range(self._dim)] for _ in range(self._dim)]
        for (i, j), terms in self._table.items():
            for k, c in terms:
                dense[i][j][k] = c
        return dense

    def __repr__(self) -> str:
        return f"StarRing({self._name}, dim={self._dim})"

    def element(self, coeffs: Sequence[Scalar]) -> RingElement:
        return RingElement(self, coeffs)

    def basis(self, index: int, coeff: Scalar = ONE) -> RingElement:
        coeffs = [ZERO] * self._dim
        coeffs[index] = coeff
        return RingElement(self, coeffs)

    def basis_by_label(self, label: str) -> RingElement:
        try:
            return self.basis(self._labels.index(label))
        except ValueError as err:
            raise ConfigurationException(
                f"Ring {self._name} has no basis element {label!r}"
            ) from err

    def one(self) -> RingElement:
        return self.basis(self._unit)

    def zero(self) -> RingElement:
        return RingElement(self, [ZERO] * self._dim)

    def scalar(self, value: Scalar) -> RingElement:
        return self.basis(self._unit, value)

    def mul_coeffs(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> List[Scalar]:
        return sparse_product(self._table, x, y, self._dim)

    def star_coeffs(self, x: Sequence[Scalar]) -> List[Scalar]:
        out: List[Scalar] = [zero_of(field_of_all(x))] * self._dim
        for j, a in enumerate(x):
            if a == 0:
                continue
            for i, c in self._invol_cols[j]:
                out[i] += c * a
        return out

    def is_scalar_coeffs(self, x: Sequence[Scalar]) -> bool:
        return all(v == 0 for i, v in enumerate(x) if i != self._unit)


class RingElement:
    """Coefficient vector relative to the basis of its ring."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: StarRing, coeffs: Sequence[Scalar]) -> None:
        if len(coeffs) != ring.dim:
            raise DimensionMismatch(
                f"{ring.name} has dimension {ring.dim}, got {len(coeffs)} coefficients"
            )
        self.ring = ring
        self.coeffs = normalize_coeffs(coeffs)

    def _check(self, other: RingElement) -> None:
        if other.ring is not self.ring and other.ring.dim != self.ring.dim:
            raise DimensionMismatch(
                f"Elements of {self.ring.name} and {other.ring.name} do not combine"
            )

    @property
    def field(self):
        return field_of_all(self.coeffs)

    def __add__(self, other: RingElement) -> RingElement:
        self._check(other)
        join_fields(self.field, other.field)
        return RingElement(self.ring, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: RingElement) -> RingElement:
        self._check(other)
        join_fields(self.field, other.field)
        return RingElement(self.ring, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> RingElement:
        return RingElement(self.ring, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, RingElement):
            self._check(other)
            return RingElement(self.ring, self.ring.mul_coeffs(self.coeffs, other.coeffs))
        return RingElement(self.ring, [a * other for a in self.coeffs])

    def __rmul__(self, other):
        return RingElement(self.ring, [other * a for a in self.coeffs])

    def star(self) -> RingElement:
        return RingElement(self.ring, self.ring.star_coeffs(self.coeffs))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def is_scalar(self) -> bool:
        return self.ring.is_scalar_coeffs(self.coeffs)

    def scalar_part(self) -> Scalar:
        return self.coeffs[self.ring.unit]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring.dim == other.ring.dim and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring.name, self.coeffs))

    def __repr__(self) -> str:
        return f"RingElement({self.ring.name}: {self})"

    def __str__(self) -> str:
        terms = [
            f"{format_scalar_text(c)}*{label}"
            for c, label in zip(self.coeffs, self.ring.labels)
            if c != 0
        ]
        return " + ".join(terms) if terms else "0"

    def to_dict(self) -> Dict[str, Scalar]:
        return {label: c for c, label in zip(self.coeffs, self.ring.labels) if c != 0}


def default_labels(dim: int) -> Tuple[str, ...]:
    return tuple(f"e{i}" for i in range(dim))


def diagonal_involution(signs: Sequence[int]) -> List[List[Fraction]]:
    dim = len(signs)
    return [[Fraction(signs[i]) if i == j else ZERO for j in range(dim)] for i in range(dim)]


def table_from_dense(dense: Sequence[Sequence[Sequence[Fraction]]]) -> SparseTable:
    table: SparseTable = {}
    for i, row in enumerate(dense):
        for j, col in enumerate(row):
            terms = tuple((k, Fraction(c)) for k, c in enumerate(col) if c != 0)
            if terms:
                table[(i, j)] = terms
    return table
