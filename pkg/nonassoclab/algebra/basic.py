"""Commutative algebras by structure constants, their elements and operators."""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from nonassoclab.const import CUSTOM, FLOAT
from nonassoclab.helper.exceptions import ConfigurationException, DimensionMismatch
from nonassoclab.ring.basic import SparseTable, sparse_product
from nonassoclab.scalar import (
    ONE,
    ZERO,
    Scalar,
    convert,
    field_of,
    field_of_all,
    format_scalar_text,
    is_exact,
    join_fields,
    normalize_coeffs,
    zero_of,
)
from nonassoclab.scalar.linalg import Span, mat_mul, rank

_LOGGER = logging.getLogger(__name__)


class CommAlgebra:
    """Finite-dimensional commutative real algebra.

    The table stores x_i o x_j only for i <= j.
    """

    def __init__(
        self,
        name: str,
        dim: int,
        table: SparseTable,
        unit: Sequence[Scalar],
        labels: Sequence[str],
        provenance: str = CUSTOM,
        info: Optional[Dict[str, Any]] = None,
    ) -> None:
        if dim < 1:
            raise ConfigurationException(f"Algebra dimension must be positive, got {dim}")
        if len(labels) != dim or len(unit) != dim:
            raise DimensionMismatch(f"{name}: labels and unit must have length {dim}")
        self._name = name
        self._dim = dim
        self._table = dict(table)
        self._unit = normalize_coeffs(unit)
        self._labels = tuple(labels)
        self._provenance = provenance
        self.info: Dict[str, Any] = dict(info or {})
        self._basis_products: Dict[Tuple[int, int], List[Scalar]] = {}

    @property
    def name(self) -> str:
        return self._name

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def table(self) -> SparseTable:
        return self._table

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def provenance(self) -> str:
        return self._provenance

    @property
    def unit(self) -> Element:
        return Element(self, self._unit)

    @property
    def table_field(self):
        return field_of_all(c for terms in self._table.values() for _, c in terms)

    @property
    def mul_table(self) -> List[List[List[Scalar]]]:
        """Dense symmetric C[i][j][k]."""
        dense = [[[ZERO] * self._dim for _ in range(self._dim)] for _ in range(self._dim)]
        for (i, j), terms in self._table.items():
            for k, c in terms:
                dense[i][j][k] = c
                dense[j][i][k] = c
        return dense

    def __repr__(self) -> str:
        return f"CommAlgebra({self._name}, dim={self._dim}, {self._provenance})"

    def mul_coeffs(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> List[Scalar]:
        return sparse_product(self._table, x, y, self._dim, symmetric=True)

    def basis_product(self, i: int, j: int) -> List[Scalar]:
        key = (i, j) if i <= j else (j, i)
        if key not in self._basis_products:
            out = [ZERO] * self._dim
            for k, c in self._table.get(key, ()):
                out[k] = c
            self._basis_products[key] = out
        return self._basis_products[key]

    def element(self, coeffs: Sequence[Scalar]) -> Element:
        return Element(self, coeffs)

    def zero(self, field=None) -> Element:
        return Element(self, [zero_of(field or "rational")] * self._dim)

    def basis(self, index: int, coeff: Scalar = ONE) -> Element:
        coeffs: List[Scalar] = [ZERO] * self._dim
        coeffs[index] = coeff
        return Element(self, coeffs)

    def basis_elements(self) -> List[Element]:
        return [self.basis(i) for i in range(self._dim)]

    def index(self, label: str) -> int:
        try:
            return self._labels.index(label)
        except ValueError as err:
            raise ConfigurationException(f"{self._name} has no basis label {label!r}") from err

    def from_dict(self, values: Dict[str, Scalar]) -> Element:
        coeffs: List[Scalar] = [ZERO] * self._dim
        for label, value in values.items():
            coeffs[self.index(label)] = value
        return Element(self, coeffs)

    def validate(self) -> None:
        """Unit law on all basis vectors."""
        unit = self.unit
        for i in range(self._dim):
            b = self.basis(i)
            if unit * b != b:
                raise ConfigurationException(
                    f"{self._name}: unit does not act as identity on {self._labels[i]}"
                )


class Element:
    """Coefficient vector relative to the basis of its algebra."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: CommAlgebra, coeffs: Sequence[Scalar]) -> None:
        if len(coeffs) != algebra.dim:
            raise DimensionMismatch(
                f"{algebra.name} has dimension {algebra.dim}, got {len(coeffs)} coefficients"
            )
        self.algebra = algebra
        self.coeffs = normalize_coeffs(coeffs)

    def _check(self, other: Element) -> None:
        if other.algebra is not self.algebra and other.algebra.dim != self.algebra.dim:
            raise DimensionMismatch(
                f"Elements of {self.algebra.name} and {other.algebra.name} do not combine"
            )

    @property
    def field(self):
        return field_of_all(self.coeffs)

    @property
    def exact(self) -> bool:
        return is_exact(self.field)

    def __add__(self, other: Element) -> Element:
        self._check(other)
        join_fields(self.field, other.field)
        return Element(self.algebra, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: Element) -> Element:
        self._check(other)
        join_fields(self.field, other.field)
        return Element(self.algebra, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> Element:
        return Element(self.algebra, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Element):
            return jordan_mul(self.algebra, self, other)
        join_fields(self.field, field_of(other))
        return Element(self.algebra, [a * other for a in self.coeffs])

    def __rmul__(self, other):
        join_fields(self.field, field_of(other))
        return Element(self.algebra, [other * a for a in self.coeffs])

    def __truediv__(self, other):
        join_fields(self.field, field_of(other))
        return Element(self.algebra, [a / other for a in self.coeffs])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra.dim == other.algebra.dim and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.algebra.name, self.coeffs))

    def is_zero(self, tol: float = 0.0) -> bool:
        if self.exact:
            return all(a == 0 for a in self.coeffs)
        return self.max_abs() <= tol

    def max_abs(self) -> float:
        return max((abs(float(a)) for a in self.coeffs), default=0.0)

    def close_to(self, other: Element, tol: float = 0.0) -> bool:
        """Exact equality for exact data, max-entry distance <= tol otherwise."""
        if self.exact and other.exact:
            return self.coeffs == other.coeffs
        return max(
            (abs(float(a) - float(b)) for a, b in zip(self.coeffs, other.coeffs)),
            default=0.0,
        ) <= tol

    def to_float(self) -> Element:
        return Element(self.algebra, [float(a) for a in self.coeffs])

    def convert(self, field) -> Element:
        return Element(self.algebra, [convert(a, field) for a in self.coeffs])

    def to_dict(self) -> Dict[str, Scalar]:
        return {
            label: value for label, value in zip(self.algebra.labels, self.coeffs) if value != 0
        }

    def __repr__(self) -> str:
        return f"Element({self.algebra.name}: {self})"

    def __str__(self) -> str:
        terms = [
            f"{format_scalar_text(c)}*{label}"
            for c, label in zip(self.coeffs, self.algebra.labels)
            if c != 0
        ]
        return " + ".join(terms) if terms else "0"


class LinearOperator:
    """dim x dim matrix acting on coefficient vectors."""

    __slots__ = ("algebra", "matrix")

    def __init__(self, algebra: CommAlgebra, matrix: Sequence[Sequence[Scalar]]) -> None:
        if len(matrix) != algebra.dim or any(len(row) != algebra.dim for row in matrix):
            raise DimensionMismatch(f"Operator on {algebra.name} must be {algebra.dim}x{algebra.dim}")
        self.algebra = algebra
        self.matrix = tuple(normalize_coeffs(row) for row in matrix)

    @classmethod
    def identity(cls, algebra: CommAlgebra) -> LinearOperator:
        n = algebra.dim
        return cls(algebra, [[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, algebra: CommAlgebra, columns: Sequence[Sequence[Scalar]]) -> LinearOperator:
        return cls(algebra, [list(row) for row in zip(*columns)])

    @property
    def field(self):
        return field_of_all(v for row in self.matrix for v in row)

    @property
    def exact(self) -> bool:
        return is_exact(self.field)

    def apply(self, x: Element) -> Element:
        if x.algebra.dim != self.algebra.dim:
            raise DimensionMismatch(
                f"Operator on {self.algebra.name} applied to element of {x.algebra.name}"
            )
        # structure data and exact data both embed into the float field
        zero = zero_of(FLOAT) if not (x.exact and self.exact) else ZERO
        nz = [(j, v) for j, v in enumerate(x.coeffs) if v != 0]
        return Element(
            self.algebra, [sum((row[j] * v for j, v in nz), zero) for row in self.matrix]
        )

    __call__ = apply

    def pullback(self, functional: Sequence[Scalar]) -> List[Scalar]:
        """Dual vector of mu o op."""
        n = self.algebra.dim
        return [
            sum((functional[i] * self.matrix[i][j] for i in range(n)), ZERO)
            for j in range(n)
        ]

    def __matmul__(self, other: LinearOperator) -> LinearOperator:
        return LinearOperator(self.algebra, mat_mul(self.matrix, other.matrix))

    def __add__(self, other: LinearOperator) -> LinearOperator:
        return LinearOperator(
            self.algebra,
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.matrix, other.matrix)],
        )

    def __sub__(self, other: LinearOperator) -> LinearOperator:
        return LinearOperator(
            self.algebra,
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.matrix, other.matrix)],
        )

    def __mul__(self, scalar: Scalar) -> LinearOperator:
        return LinearOperator(self.algebra, [[a * scalar for a in row] for row in self.matrix])

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearOperator):
            return NotImplemented
        return self.matrix == other.matrix

    __hash__ = None  # type: ignore[assignment]

    def max_abs(self) -> float:
        return max((abs(float(v)) for row in self.matrix for v in row), default=0.0)

    def distance(self, other: LinearOperator) -> float:
        """Max-entry distance."""
        return (self - other).max_abs()

    def close_to(self, other: LinearOperator, tol: float = 0.0) -> bool:
        if self.exact and other.exact:
            return self.matrix == other.matrix
        return self.distance(other) <= tol

    def rank(self, tol: float = 1e-9) -> int:
        return rank(self.matrix, tol)

    def columns(self) -> List[List[Scalar]]:
        return [list(col) for col in zip(*self.matrix)]

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(v) for v in row] for row in self.matrix], dtype=float)


def _check_member(algebra: CommAlgebra, *elements: Element) -> None:
    for element in elements:
        if element.algebra.dim != algebra.dim:
            raise DimensionMismatch(
                f"Element of {element.algebra.name} used in {algebra.name} (dim {algebra.dim})"
            )


def jordan_mul(algebra: CommAlgebra, x: Element, y: Element) -> Element:
    _check_member(algebra, x, y)
    return Element(algebra, algebra.mul_coeffs(x.coeffs, y.coeffs))


def triple_product(algebra: CommAlgebra, a: Element, b: Element, c: Element) -> Element:
    """{a, b, c} = a o (b o c) - b o (c o a) + c o (a o b)."""
    return a * (b * c) - b * (c * a) + c * (a * b)


def power(algebra: CommAlgebra, x: Element, n: int) -> Element:
    """Left-normed power x^(k+1) = x o x^k."""
    if n < 1:
        raise ValueError(f"Power exponent must be >= 1, got {n}")
    _check_member(algebra, x)
    result = x
    for _ in range(n - 1):
        result = jordan_mul(algebra, x, result)
    return result


def mult_operator(algebra: CommAlgebra, x: Element) -> LinearOperator:
    """Matrix of T_x: y -> x o y."""
    _check_member(algebra, x)
    field = x.field
    columns = []
    nz = [(i, a) for i, a in enumerate(x.coeffs) if a != 0]
    for j in range(algebra.dim):
        column = [zero_of(field)] * algebra.dim
        for i, a in nz:
            for k, c in algebra.table.get((i, j) if i <= j else (j, i), ()):
                column[k] += a * c
        columns.append(column)
    return LinearOperator.from_columns(algebra, columns)


def subalgebra_generated(
    algebra: CommAlgebra,
    gens: Sequence[Element],
    with_unit: bool = True,
    tol: float = 1e-9,
) -> List[Element]:
    """Echelonised basis of the smallest product-closed subspace containing gens."""
    if not gens:
        raise ValueError("subalgebra_generated needs at least one generator")
    _check_member(algebra, *gens)
    exact = all(g.exact for g in gens)
    span = Span(algebra.dim, exact=exact, tol=tol)
    members: List[Element] = []
    seeds = ([algebra.unit if exact else algebra.unit.to_float()] if with_unit else []) + list(gens)
    for g in seeds:
        if span.add(g.coeffs):
            members.append(g)
    done = 0
    while done < len(members):
        x = members[done]
        for y in members[: done + 1]:
            product = x * y
            if span.add(product.coeffs):
                members.append(product)
        done += 1
    _LOGGER.debug("Generated subalgebra of %s has dimension %d", algebra.name, len(members))
    return [Element(algebra, row) for row in span.basis()]


def random_element(
    algebra: CommAlgebra,
    rng: np.random.Generator,
    low: int = -3,
    high: int = 3,
    density: float = 1.0,
    denominator: int = 1,
) -> Element:
    """Seeded exact element with integer (or 1/denominator) coefficients in [low, high]."""
    values = rng.integers(low, high + 1, size=algebra.dim)
    mask = rng.random(algebra.dim) < density
    return Element(
        algebra,
        [Fraction(int(v), denominator) if m else ZERO for v, m in zip(values, mask)],
    )


__all__ = [
    "CommAlgebra",
    "Element",
    "LinearOperator",
    "jordan_mul",
    "triple_product",
    "power",
    "mult_operator",
    "subalgebra_generated",
    "random_element",
]
