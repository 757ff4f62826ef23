"""Row echelon linear algebra over exact fields, numpy for floats."""
from __future__ import annotations

import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import ONE, ZERO, Scalar, field_of_all, is_exact, zero_of

_LOGGER = logging.getLogger(__name__)

Vector = Sequence[Scalar]


def _is_float_data(rows: Sequence[Vector]) -> bool:
    for row in rows:
        for value in row:
            if isinstance(value, float):
                return True
    return False


def form_echelon(
    m: List[List[Scalar]], t: Optional[List[Scalar]] = None
) -> List[int]:
    """Gaussian elimination in place, returns the free columns."""
    free_vars: List[int] = []
    n_rows = len(m)
    if n_rows == 0:
        return free_vars
    n_cols = len(m[0])
    piv_r = 0
    for piv_c in range(n_cols):
        for i_row in range(piv_r, n_rows):
            if m[i_row][piv_c] != 0:
                break
        else:
            free_vars.append(piv_c)
            continue
        if i_row != piv_r:
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
            if t is not None:
                t[piv_r], t[i_row] = t[i_row], t[piv_r]
        fp = m[piv_r][piv_c]
        for r in range(piv_r + 1, n_rows):
            fr = m[r][piv_c]
            if fr == 0:
                continue
            frp = fr / fp
            for c in range(piv_c, n_cols):
                m[r][c] -= m[piv_r][c] * frp
            if t is not None:
                t[r] -= t[piv_r] * frp
        piv_r += 1
        if piv_r == n_rows:
            free_vars.extend(range(piv_c + 1, n_cols))
            break
    return free_vars


def rref(rows: Sequence[Vector]) -> Tuple[List[List[Scalar]], List[int]]:
    """Reduced row echelon form of exact data: (nonzero rows, pivot columns)."""
    m = [list(row) for row in rows]
    if not m:
        return [], []
    n_cols = len(m[0])
    pivots: List[int] = []
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r == len(m):
            break
        for i_row in range(piv_r, len(m)):
            if m[i_row][piv_c] != 0:
                break
        else:
            continue
        m[piv_r], m[i_row] = m[i_row], m[piv_r]
        fp = m[piv_r][piv_c]
        m[piv_r] = [value / fp for value in m[piv_r]]
        for r in range(len(m)):
            if r == piv_r:
                continue
            fr = m[r][piv_c]
            if fr == 0:
                continue
            m[r] = [a - fr * b for a, b in zip(m[r], m[piv_r])]
        pivots.append(piv_c)
        piv_r += 1
    return m[:piv_r], pivots


def rank(rows: Sequence[Vector], tol: float = 1e-9) -> int:
    if not rows:
        return 0
    if _is_float_data(rows):
        return float_rank(rows, tol)
    return len(rref(rows)[1])


def float_rank(rows: Sequence[Vector], tol: float = 1e-9) -> int:
    if not rows:
        return 0
    matrix = np.array([[float(v) for v in row] for row in rows], dtype=float)
    if not matrix.size:
        return 0
    return int(np.linalg.matrix_rank(matrix, tol=tol * max(1.0, np.abs(matrix).max())))


def nullspace(rows: Sequence[Vector], n_cols: int) -> List[List[Scalar]]:
    """Exact basis of {z : M z = 0}; basis vector k is 1 at the k-th free column."""
    if not rows:
        return [[ONE if i == j else ZERO for i in range(n_cols)] for j in range(n_cols)]
    reduced, pivots = rref(rows)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        vector = [ZERO] * n_cols
        vector[f] = ONE
        for row, p in zip(reduced, pivots):
            vector[p] = -row[f]
        basis.append(vector)
    return basis


def solve(columns: Sequence[Vector], rhs: Vector, tol: float = 1e-9) -> Optional[List[Scalar]]:
    """Coefficients c with sum_k c_k columns[k] = rhs, or None."""
    if not columns:
        return [] if all(v == 0 for v in rhs) else None
    if _is_float_data(columns) or _is_float_data([rhs]):
        matrix = np.array([[float(v) for v in col] for col in columns], dtype=float).T
        target = np.array([float(v) for v in rhs], dtype=float)
        coeffs, *_ = np.linalg.lstsq(matrix, target, rcond=None)
        if np.abs(matrix @ coeffs - target).max(initial=0.0) > tol * max(
            1.0, np.abs(target).max(initial=0.0)
        ):
            return None
        return [float(c) for c in coeffs]
    n_rows = len(rhs)
    m = [[columns[k][r] for k in range(len(columns))] for r in range(n_rows)]
    t = list(rhs)
    free_vars = form_echelon(m, t)
    n_cols = len(columns)
    rank_ = n_cols - len(free_vars)
    for r in range(rank_, n_rows):
        if t[r] != 0:
            return None
    sol: List[Scalar] = [ZERO] * n_cols
    free_flags = [False] * n_cols
    for c in free_vars:
        free_flags[c] = True
    piv_cols = [c for c, f in enumerate(free_flags) if not f]
    for r in range(len(piv_cols) - 1, -1, -1):
        piv_c = piv_cols[r]
        s = -t[r]
        for c in range(piv_c + 1, n_cols):
            s += m[r][c] * sol[c]
        sol[piv_c] = -s / m[r][piv_c]
    return sol


def mat_mul(a: Sequence[Vector], b: Sequence[Vector]) -> List[List[Scalar]]:
    if _is_float_data(a) or _is_float_data(b):
        product = np.array(a, dtype=float) @ np.array(b, dtype=float)
        return product.tolist()
    n = len(b[0]) if b else 0
    bt = list(zip(*b))
    result = []
    for row in a:
        nz = [(k, v) for k, v in enumerate(row) if v != 0]
        result.append([sum((v * bt[j][k] for k, v in nz), ZERO) for j in range(n)])
    return result


class Span:
    """Growing linear span, echelonised incrementally.

    Exact data is reduced against normalised pivot rows; float data is kept
    as an orthonormal frame with tolerance `tol`.
    """

    def __init__(self, dim: int, exact: bool = True, tol: float = 1e-9) -> None:
        self.dim = dim
        self.exact = exact
        self.tol = tol
        self._rows: List[Tuple[int, List[Scalar]]] = []
        self._frame: List[np.ndarray] = []
        self.vectors: List[List[Scalar]] = []

    def __len__(self) -> int:
        return len(self.vectors)

    def _reduce(self, vector: Vector) -> List[Scalar]:
        residual = list(vector)
        for pivot, row in self._rows:
            coeff = residual[pivot]
            if coeff != 0:
                residual = [a - coeff * b for a, b in zip(residual, row)]
        return residual

    def _float_residual(self, vector: Vector) -> np.ndarray:
        residual = np.array([float(v) for v in vector], dtype=float)
        for q in self._frame:
            residual = residual - (q @ residual) * q
        return residual

    def contains(self, vector: Vector) -> bool:
        if self.exact:
            return all(v == 0 for v in self._reduce(vector))
        scale = max(1.0, float(np.abs(np.array(vector, dtype=float)).max(initial=0.0)))
        return float(np.abs(self._float_residual(vector)).max(initial=0.0)) <= self.tol * scale

    def add(self, vector: Vector) -> bool:
        """Add `vector`; True when it enlarged the span."""
        if self.exact:
            residual = self._reduce(vector)
            pivot = next((i for i, v in enumerate(residual) if v != 0), None)
            if pivot is None:
                return False
            lead = residual[pivot]
            self._rows.append((pivot, [v / lead for v in residual]))
        else:
            scale = max(1.0, float(np.abs(np.array(vector, dtype=float)).max(initial=0.0)))
            residual = self._float_residual(vector)
            norm = float(np.linalg.norm(residual))
            if norm <= self.tol * scale:
                return False
            # second pass keeps the frame orthonormal
            q = residual / norm
            for other in self._frame:
                q = q - (other @ q) * other
            self._frame.append(q / np.linalg.norm(q))
        self.vectors.append(list(vector))
        return True

    def basis(self) -> List[List[Scalar]]:
        """Echelonised basis: reduced row echelon rows for exact data."""
        if not self.vectors:
            return []
        if self.exact:
            return rref(self.vectors)[0]
        return [list(v) for v in self.vectors]


def is_exact_data(rows: Sequence[Vector]) -> bool:
    return is_exact(field_of_all(v for row in rows for v in row))


def zero_vector(dim: int, field) -> List[Scalar]:
    return [zero_of(field)] * dim
