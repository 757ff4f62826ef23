"""Spin factors R1 + H with (s1 + u) o (t1 + v) = (st + <u, v>)1 + sv + tu."""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

from nonassoclab.const import SPIN_FACTOR
from nonassoclab.helper.exceptions import ConfigurationException, DimensionMismatch
from nonassoclab.ring.basic import SparseTable
from nonassoclab.scalar import HALF, ONE, ZERO, Scalar

from .basic import CommAlgebra, Element

_LOGGER = logging.getLogger(__name__)


def spin_factor(d: int) -> CommAlgebra:
    """Spin factor of total dimension d >= 2; basis 1, u1, ..., u(d-1)."""
    if d < 2:
        raise ConfigurationException(f"Spin factor needs dimension >= 2, got {d}")
    table: SparseTable = {}
    for j in range(d):
        table[(0, j)] = ((j, ONE),)
    for i in range(1, d):
        table[(i, i)] = ((0, ONE),)
    labels = ["1"] + [f"u{i}" for i in range(1, d)]
    return CommAlgebra(
        name=f"spin({d})",
        dim=d,
        table=table,
        unit=[ONE] + [ZERO] * (d - 1),
        labels=labels,
        provenance=SPIN_FACTOR,
        info={"d": d},
    )


def spin_parts(x: Element) -> Tuple[Scalar, List[Scalar]]:
    """(s, w) with x = s1 + w."""
    return x.coeffs[0], list(x.coeffs[1:])


def spin_element(algebra: CommAlgebra, s: Scalar, w: Sequence[Scalar]) -> Element:
    if len(w) != algebra.dim - 1:
        raise DimensionMismatch(f"{algebra.name} needs vectors of length {algebra.dim - 1}")
    return Element(algebra, [s] + list(w))


def inner(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    return sum((a * b for a, b in zip(u, v)), ZERO)


def spin_event(algebra: CommAlgebra, u: Sequence[Scalar]) -> Element:
    """1/2 (1 + u); idempotent iff <u, u> = 1."""
    return spin_element(algebra, HALF, [HALF * c for c in u])


def rational_unit_vector(params: Sequence[Fraction]) -> List[Fraction]:
    """Inverse stereographic projection of params in Q^(m-1) onto S^(m-1).

    Every output has rational coordinates and squared length exactly 1.
    """
    t = [Fraction(p) for p in params]
    s = sum((c * c for c in t), ZERO)
    denom = s + ONE
    return [2 * c / denom for c in t] + [(s - ONE) / denom]


def unit_vectors(d: int, count: int, rng) -> List[List[Fraction]]:
    """Seeded rational unit vectors in R^(d-1), coordinate axes first."""
    m = d - 1
    vectors: List[List[Fraction]] = []
    for i in range(m):
        for sign in (ONE, -ONE):
            if len(vectors) < count:
                vectors.append([sign if k == i else ZERO for k in range(m)])
    while len(vectors) < count:
        if m == 1:
            break
        params = [Fraction(int(rng.integers(-4, 5)), int(rng.integers(1, 4))) for _ in range(m - 1)]
        vectors.append(rational_unit_vector(params))
    return vectors
