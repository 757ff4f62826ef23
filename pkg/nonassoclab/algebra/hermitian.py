"""H_n(R): Hermitian n x n matrices over a *-ring with a o b = (ab + ba)/2."""
from __future__ import annotations

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from nonassoclab.const import HERMITIAN_MATRIX
from nonassoclab.helper.exceptions import ConfigurationException, DimensionMismatch
from nonassoclab.ring import RingElement, StarRing, self_adjoint_basis
from nonassoclab.ring.basic import SparseTable
from nonassoclab.scalar import HALF, ZERO, Scalar, field_of_all, zero_of

from .basic import CommAlgebra, Element

_LOGGER = logging.getLogger(__name__)

# sparse matrix: (row, col) -> coefficient vector in R
Matrix = Dict[Tuple[int, int], Tuple[Scalar, ...]]


class HermitianLayout:
    """Basis bookkeeping of H_n(R).

    Diagonal block: a_ii * h for h in a basis of R_sa.
    Off-diagonal block: alpha a_ij + alpha* a_ji for i < j, alpha a basis of R.
    """

    def __init__(self, ring: StarRing, n: int) -> None:
        self.ring = ring
        self.n = n
        self.sa_basis = self_adjoint_basis(ring)
        self._sa_columns = _distinguished_columns([b.coeffs for b in self.sa_basis])
        self.slots: List[Tuple[int, int, int]] = []
        for i in range(n):
            for h in range(len(self.sa_basis)):
                self.slots.append((i, i, h))
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(ring.dim):
                    self.slots.append((i, j, k))
        self._slot_index = {slot: idx for idx, slot in enumerate(self.slots)}

    @property
    def dim(self) -> int:
        return len(self.slots)

    def labels(self) -> List[str]:
        out = []
        sa_labels = [_sa_label(self.ring, b) for b in self.sa_basis]
        for i, j, k in self.slots:
            name = f"a{i + 1}{j + 1}"
            if i == j:
                out.append(name if len(self.sa_basis) == 1 else f"{name}[{sa_labels[k]}]")
            else:
                out.append(name if self.ring.dim == 1 else f"{name}[{self.ring.labels[k]}]")
        return out

    def basis_matrix(self, index: int) -> Matrix:
        i, j, k = self.slots[index]
        if i == j:
            return {(i, i): self.sa_basis[k].coeffs}
        alpha = self.ring.basis(k)
        return {(i, j): alpha.coeffs, (j, i): alpha.star().coeffs}

    def to_matrix(self, coeffs: Sequence[Scalar]) -> Matrix:
        field = field_of_all(coeffs)
        dim = self.ring.dim
        out: Dict[Tuple[int, int], List[Scalar]] = {}
        for idx, c in enumerate(coeffs):
            if c == 0:
                continue
            for pos, vec in self.basis_matrix(idx).items():
                acc = out.setdefault(pos, [zero_of(field)] * dim)
                for t, v in enumerate(vec):
                    if v != 0:
                        acc[t] += c * v
        return {pos: tuple(vec) for pos, vec in out.items()}

    def from_matrix(self, matrix: Matrix) -> List[Scalar]:
        """Coordinates of a Hermitian matrix; raises when it is not Hermitian."""
        values = [v for vec in matrix.values() for v in vec]
        field = field_of_all(values) if values else "rational"
        coeffs: List[Scalar] = [zero_of(field)] * self.dim
        ring = self.ring
        for (i, j), vec in matrix.items():
            if i == j:
                element = RingElement(ring, vec)
                if element.star() != element:
                    raise ConfigurationException(
                        f"Diagonal entry ({i + 1},{i + 1}) = {element} is not self-adjoint"
                    )
                for h, col in enumerate(self._sa_columns):
                    coeffs[self._slot_index[(i, i, h)]] = vec[col]
            elif i < j:
                mirrored = matrix.get((j, i))
                star = RingElement(ring, vec).star()
                if mirrored is None and not star.is_zero() or (
                    mirrored is not None and RingElement(ring, mirrored) != star
                ):
                    raise ConfigurationException(
                        f"Entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) are not adjoint"
                    )
                for k, v in enumerate(vec):
                    coeffs[self._slot_index[(i, j, k)]] = v
            elif (j, i) not in matrix and any(v != 0 for v in vec):
                raise ConfigurationException(
                    f"Entry ({i + 1},{j + 1}) has no adjoint partner"
                )
        return coeffs


def _distinguished_columns(vectors: Sequence[Sequence[Scalar]]) -> List[int]:
    """For each vector a column where it is 1 and all others vanish."""
    columns = []
    for idx, vec in enumerate(vectors):
        for col, value in enumerate(vec):
            if value == 1 and all(other[col] == 0 for o, other in enumerate(vectors) if o != idx):
                columns.append(col)
                break
        else:
            raise ConfigurationException("Self-adjoint basis is not in reduced form")
    return columns


def _sa_label(ring: StarRing, element: RingElement) -> str:
    nz = [ring.labels[i] for i, c in enumerate(element.coeffs) if c != 0]
    return "+".join(nz)


def _matrix_product(ring: StarRing, a: Matrix, b: Matrix) -> Dict[Tuple[int, int], List[Scalar]]:
    out: Dict[Tuple[int, int], List[Scalar]] = {}
    for (i, k), x in a.items():
        for (k2, j), y in b.items():
            if k != k2:
                continue
            product = ring.mul_coeffs(x, y)
            acc = out.setdefault((i, j), [ZERO] * ring.dim)
            for t, v in enumerate(product):
                if v != 0:
                    acc[t] += v
    return out


def symmetrized_matrix_product(ring: StarRing, a: Matrix, b: Matrix) -> Matrix:
    """(ab + ba) / 2 with entries multiplied in R."""
    ab = _matrix_product(ring, a, b)
    ba = _matrix_product(ring, b, a)
    out: Matrix = {}
    for pos in set(ab) | set(ba):
        left = ab.get(pos, [ZERO] * ring.dim)
        right = ba.get(pos, [ZERO] * ring.dim)
        vec = tuple((x + y) * HALF for x, y in zip(left, right))
        if any(v != 0 for v in vec):
            out[pos] = vec
    return out


def hermitian_matrix_algebra(ring: StarRing, n: int) -> CommAlgebra:
    """H_n(R) with dimension n dim(R_sa) + n(n-1)/2 dim(R)."""
    if n < 1:
        raise ConfigurationException(f"Matrix size must be >= 1, got {n}")
    layout = HermitianLayout(ring, n)
    dim = layout.dim
    matrices = [layout.basis_matrix(p) for p in range(dim)]
    table: SparseTable = {}
    for p in range(dim):
        for q in range(p, dim):
            product = symmetrized_matrix_product(ring, matrices[p], matrices[q])
            if not product:
                continue
            coeffs = layout.from_matrix(product)
            terms = tuple((k, c) for k, c in enumerate(coeffs) if c != 0)
            if terms:
                table[(p, q)] = terms
    unit_matrix: Matrix = {(i, i): ring.one().coeffs for i in range(n)}
    unit = layout.from_matrix(unit_matrix)
    name = f"H_{n}({ring.name})"
    _LOGGER.info("Built %s of dimension %d", name, dim)
    return CommAlgebra(
        name=name,
        dim=dim,
        table=table,
        unit=unit,
        labels=layout.labels(),
        provenance=HERMITIAN_MATRIX,
        info={"ring": ring, "n": n, "layout": layout},
    )


def layout_of(algebra: CommAlgebra) -> HermitianLayout:
    layout: Optional[HermitianLayout] = algebra.info.get("layout")
    if layout is None:
        raise ConfigurationException(f"{algebra.name} is not a Hermitian matrix algebra")
    return layout


def element_to_matrix(algebra: CommAlgebra, x: Element) -> List[List[RingElement]]:
    layout = layout_of(algebra)
    if x.algebra.dim != algebra.dim:
        raise DimensionMismatch(f"Element does not belong to {algebra.name}")
    sparse = layout.to_matrix(x.coeffs)
    ring = layout.ring
    zero = [zero_of(x.field)] * ring.dim
    return [
        [RingElement(ring, sparse.get((i, j), zero)) for j in range(layout.n)]
        for i in range(layout.n)
    ]


def matrix_to_element(algebra: CommAlgebra, matrix: Sequence[Sequence[RingElement]]) -> Element:
    layout = layout_of(algebra)
    if len(matrix) != layout.n or any(len(row) != layout.n for row in matrix):
        raise DimensionMismatch(f"{algebra.name} needs {layout.n}x{layout.n} matrices")
    sparse: Matrix = {
        (i, j): entry.coeffs
        for i, row in enumerate(matrix)
        for j, entry in enumerate(row)
        if not entry.is_zero()
    }
    return Element(algebra, layout.from_matrix(sparse))


def matrix_unit_element(algebra: CommAlgebra, i: int, j: int, alpha: Optional[RingElement] = None) -> Element:
    """alpha a_ij + alpha* a_ji (0-based i, j); alpha a_ii on the diagonal."""
    layout = layout_of(algebra)
    ring = layout.ring
    alpha = alpha if alpha is not None else ring.one()
    if i == j:
        sparse: Matrix = {(i, i): alpha.coeffs}
    else:
        sparse = {(i, j): alpha.coeffs, (j, i): alpha.star().coeffs}
    sparse = {pos: vec for pos, vec in sparse.items() if any(v != 0 for v in vec)}
    return Element(algebra, layout.from_matrix(sparse))


def diagonal_element(algebra: CommAlgebra, values: Sequence[Scalar]) -> Element:
    layout = layout_of(algebra)
    ring = layout.ring
    sparse: Matrix = {
        (i, i): ring.scalar(v).coeffs for i, v in enumerate(values) if v != 0
    }
    return Element(algebra, layout.from_matrix(sparse))


def trace_functional(algebra: CommAlgebra) -> List[Scalar]:
    """Dual vector of x -> Re tr(x)."""
    layout = layout_of(algebra)
    unit = layout.ring.unit
    return [
        layout.sa_basis[k].coeffs[unit] if i == j else ZERO
        for i, j, k in layout.slots
    ]


def rank_one_projection(
    algebra: CommAlgebra, i: int, j: int, beta: RingElement, scale: Scalar = 1
) -> Optional[Element]:
    """v v* / (v* v) for v = scale e_i + beta e_j.

    Two coordinates at a time keep the entries inside an associative
    subalgebra, so this is an idempotent over any alternative ring. Returns
    None when v* v is not a nonzero scalar.
    """
    layout = layout_of(algebra)
    ring = layout.ring
    a = ring.scalar(scale)
    bb = beta * beta.star()
    norm = a * a + bb
    if not norm.is_scalar() or norm.scalar_part() == 0 or not (beta.star() * beta).is_scalar():
        return None
    inv = 1 / norm.scalar_part()
    sparse: Matrix = {
        (i, i): (a * a * inv).coeffs,
        (j, j): (bb * inv).coeffs,
        (i, j): (a * beta.star() * inv).coeffs,
        (j, i): (beta * a * inv).coeffs,
    }
    sparse = {pos: vec for pos, vec in sparse.items() if any(v != 0 for v in vec)}
    return Element(algebra, layout.from_matrix(sparse))
