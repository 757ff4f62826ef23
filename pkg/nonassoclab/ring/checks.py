"""Exact interrogation of a StarRing: involution, alternativity, norm form."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import List, Optional, Tuple

from nonassoclab.const import NEGATIVE_WITNESS, POSITIVE_DEFINITE, ZERO_WITNESS
from nonassoclab.helper.exceptions import DimensionMismatch, NotScalarForm
from nonassoclab.scalar import HALF, ONE, ZERO, Scalar
from nonassoclab.scalar.linalg import nullspace

from .basic import RingElement, StarRing

_LOGGER = logging.getLogger(__name__)


@dataclass
class RingVerdict:
    """Outcome of an exact check on basis data."""

    name: str
    holds: bool
    witness: Tuple[RingElement, ...] = ()
    residual: Optional[RingElement] = None
    detail: str = ""


@dataclass
class NormDefiniteness:
    status: str
    witness: Optional[RingElement] = None
    value: Optional[Scalar] = None
    signature: Tuple[int, int, int] = (0, 0, 0)
    diagonal: List[Scalar] = field(default_factory=list)


def _own(ring: StarRing, *elements: RingElement) -> None:
    for element in elements:
        if element.ring is not ring and element.ring.dim != ring.dim:
            raise DimensionMismatch(
                f"{element.ring.name} element used in {ring.name} (dim {ring.dim})"
            )


def ring_mul(ring: StarRing, alpha: RingElement, beta: RingElement) -> RingElement:
    _own(ring, alpha, beta)
    return RingElement(ring, ring.mul_coeffs(alpha.coeffs, beta.coeffs))


def star(ring: StarRing, alpha: RingElement) -> RingElement:
    _own(ring, alpha)
    return RingElement(ring, ring.star_coeffs(alpha.coeffs))


def norm_form(ring: StarRing, alpha: RingElement) -> RingElement:
    """alpha* alpha."""
    return ring_mul(ring, star(ring, alpha), alpha)


def self_adjoint_basis(ring: StarRing) -> List[RingElement]:
    """Basis of R_sa = {a : a* = a}, the unit first when it is fixed."""
    rows = [
        [ring.invol[i][j] - (ONE if i == j else ZERO) for j in range(ring.dim)]
        for i in range(ring.dim)
    ]
    vectors = nullspace(rows, ring.dim)
    basis = [RingElement(ring, v) for v in vectors]
    one = ring.one()
    basis.sort(key=lambda b: 0 if b == one else 1)
    return basis


def hermitian_scalar_check(ring: StarRing) -> RingVerdict:
    """Holds iff R_sa is spanned by the unit."""
    basis = self_adjoint_basis(ring)
    for element in basis:
        if not element.is_scalar():
            return RingVerdict(
                "hermitian-scalar",
                False,
                (element,),
                detail=f"R_sa has dimension {len(basis)}",
            )
    return RingVerdict("hermitian-scalar", True, detail="R_sa = R1")


def involution_check(ring: StarRing) -> RingVerdict:
    """invol is an involution, an anti-automorphism and fixes 1."""
    name = "involution"
    for i in range(ring.dim):
        b = ring.basis(i)
        if b.star().star() != b:
            return RingVerdict(name, False, (b,), b.star().star() - b, "a** != a")
    one = ring.one()
    if one.star() != one:
        return RingVerdict(name, False, (one,), one.star() - one, "1* != 1")
    for i, j in product(range(ring.dim), repeat=2):
        a, b = ring.basis(i), ring.basis(j)
        lhs = (a * b).star()
        rhs = b.star() * a.star()
        if lhs != rhs:
            return RingVerdict(name, False, (a, b), lhs - rhs, "(ab)* != b*a*")
    for i in range(ring.dim):
        for side in ("left", "right"):
            b = ring.basis(i)
            value = one * b if side == "left" else b * one
            if value != b:
                return RingVerdict(name, False, (b,), value - b, f"unit fails on the {side}")
    return RingVerdict(name, True)


def associativity_check(ring: StarRing) -> RingVerdict:
    """(ab)c = a(bc) on all basis triples."""
    dim = ring.dim
    basis = [ring.basis(i) for i in range(dim)]
    for i, j in product(range(dim), repeat=2):
        ab = basis[i] * basis[j]
        for k in range(dim):
            lhs = ab * basis[k]
            rhs = basis[i] * (basis[j] * basis[k])
            if lhs != rhs:
                _LOGGER.debug("Associator nonzero on basis %s, %s, %s", i, j, k)
                return RingVerdict(
                    "associativity", False, (basis[i], basis[j], basis[k]), lhs - rhs
                )
    return RingVerdict("associativity", True)


def _left_polar(a: RingElement, c: RingElement, b: RingElement) -> RingElement:
    return a * (c * b) + c * (a * b) - (a * c + c * a) * b


def _right_polar(a: RingElement, c: RingElement, b: RingElement) -> RingElement:
    return (b * a) * c + (b * c) * a - b * (a * c + c * a)


def left_alternative_defect(alpha: RingElement, beta: RingElement) -> RingElement:
    return alpha * (alpha * beta) - (alpha * alpha) * beta


def right_alternative_defect(alpha: RingElement, beta: RingElement) -> RingElement:
    return (beta * alpha) * alpha - beta * (alpha * alpha)


def alternativity_check(ring: StarRing) -> RingVerdict:
    """Left and right alternative laws, polarised on basis triples.

    A polarised failure at (a, c, b) means one of e_a, e_c, e_a + e_c fails
    the unpolarised law with beta = e_b; that pair is the witness.
    """
    dim = ring.dim
    basis = [ring.basis(i) for i in range(dim)]
    for a in range(dim):
        for c in range(a, dim):
            for b in range(dim):
                for law, polar, defect in (
                    ("left", _left_polar, left_alternative_defect),
                    ("right", _right_polar, right_alternative_defect),
                ):
                    if polar(basis[a], basis[c], basis[b]).is_zero():
                        continue
                    beta = basis[b]
                    for alpha in (basis[a], basis[c], basis[a] + basis[c]):
                        residual = defect(alpha, beta)
                        if not residual.is_zero():
                            return RingVerdict(
                                "alternativity",
                                False,
                                (alpha, beta),
                                residual,
                                f"{law} alternative law fails at basis ({a}, {c}, {b})",
                            )
    return RingVerdict("alternativity", True)


def _bilinear(ring: StarRing, u: RingElement, v: RingElement) -> Fraction:
    """Polar form of the scalar quadratic form a -> (a* a)_1."""
    value = star(ring, u) * v + star(ring, v) * u
    return value.scalar_part() * HALF


def norm_definiteness_check(ring: StarRing) -> NormDefiniteness:
    """Diagonalise a -> a* a by congruence over the rationals.

    Needs R_sa = R1 so that a* a is a scalar.
    """
    verdict = hermitian_scalar_check(ring)
    if not verdict.holds:
        raise NotScalarForm(
            f"{ring.name}: self-adjoint part is larger than R1 ({verdict.detail})"
        )
    remaining = [ring.basis(i) for i in range(ring.dim)]
    diagonal: List[Fraction] = []
    vectors: List[RingElement] = []
    while remaining:
        pivot_idx = next(
            (k for k, v in enumerate(remaining) if _bilinear(ring, v, v) != 0), None
        )
        if pivot_idx is None:
            pair = next(
                (
                    (k, l)
                    for k in range(len(remaining))
                    for l in range(k + 1, len(remaining))
                    if _bilinear(ring, remaining[k], remaining[l]) != 0
                ),
                None,
            )
            if pair is None:
                # totally isotropic and orthogonal to everything else
                for v in remaining:
                    diagonal.append(ZERO)
                    vectors.append(v)
                break
            k, l = pair
            remaining[k] = remaining[k] + remaining[l]
            continue
        pivot = remaining.pop(pivot_idx)
        d = _bilinear(ring, pivot, pivot)
        diagonal.append(d)
        vectors.append(pivot)
        remaining = [
            w - (_bilinear(ring, pivot, w) / d) * pivot for w in remaining
        ]
        remaining = [w for w in remaining if not w.is_zero()]

    positives = sum(1 for d in diagonal if d > 0)
    negatives = sum(1 for d in diagonal if d < 0)
    zeros = ring.dim - positives - negatives
    signature = (positives, negatives, zeros)
    for status, test in ((NEGATIVE_WITNESS, lambda d: d < 0), (ZERO_WITNESS, lambda d: d == 0)):
        for d, v in zip(diagonal, vectors):
            if test(d):
                _LOGGER.debug("%s: norm form value %s at %s", ring.name, d, v)
                return NormDefiniteness(status, v, norm_form(ring, v).scalar_part(), signature, diagonal)
    return NormDefiniteness(POSITIVE_DEFINITE, signature=signature, diagonal=diagonal)
