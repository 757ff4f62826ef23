"""Spectral resolutions x = sum t_k e_k over the associative subalgebra x generates.

At finite dimension a spectral measure is determined by its atoms, so a
resolution is the finite list of (eigenvalue, idempotent) pairs.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, List, Sequence, Tuple

from nonassoclab.algebra import CommAlgebra, Element, subalgebra_generated
from nonassoclab.const import DEFAULT_TOL
from nonassoclab.helper.exceptions import (
    IdempotentDefect,
    NonAssociativeGenerated,
    ReconstructionDefect,
)
from nonassoclab.identities import check_associative
from nonassoclab.scalar import Scalar, simplify

from .polynomial import minimal_polynomial, real_roots

_LOGGER = logging.getLogger(__name__)


@dataclass
class SpectralResolution:
    pairs: List[Tuple[Scalar, Element]]
    source: Element
    minimal_polynomial: List[Scalar] = field(default_factory=list)
    exact: bool = True

    @property
    def eigenvalues(self) -> List[Scalar]:
        return [t for t, _ in self.pairs]

    @property
    def idempotents(self) -> List[Element]:
        return [e for _, e in self.pairs]

    def reconstruct(self) -> Element:
        total = self.source.algebra.zero() if self.exact else self.source.algebra.zero("float")
        for t, e in self.pairs:
            total = total + e * t
        return total

    def apply(self, function: Callable[[Scalar], Scalar]) -> Element:
        """f(x) = sum f(t_k) e_k."""
        total = self.source.algebra.zero() if self.exact else self.source.algebra.zero("float")
        for t, e in self.pairs:
            total = total + e * function(t)
        return total


def _lagrange_idempotent(algebra: CommAlgebra, x: Element, roots: Sequence[Scalar], k: int) -> Element:
    """prod_{l != k} (x - t_l 1) / (t_k - t_l), evaluated inside B."""
    unit = algebra.unit if x.exact else algebra.unit.to_float()
    result = unit
    for l, t in enumerate(roots):
        if l == k:
            continue
        result = (x * result - result * t) / (roots[k] - t)
    return result


def verify_resolution(resolution: SpectralResolution, tol: float = DEFAULT_TOL) -> None:
    """Raise unless sum e_k = 1, e_k o e_l = delta_kl e_k and sum t_k e_k = x."""
    algebra = resolution.source.algebra
    exact = resolution.exact
    check = 0.0 if exact else tol
    unit = algebra.unit if exact else algebra.unit.to_float()
    idempotents = resolution.idempotents
    for k, e in enumerate(idempotents):
        square = e * e
        if not square.close_to(e, check):
            raise IdempotentDefect(
                f"Spectral idempotent {k} fails e o e = e", witness=e, defect=square - e
            )
        for f in idempotents[k + 1:]:
            product = e * f
            if not product.is_zero(check):
                raise IdempotentDefect("Spectral idempotents are not orthogonal", witness=(e, f), defect=product)
    total = idempotents[0]
    for e in idempotents[1:]:
        total = total + e
    if not total.close_to(unit, check):
        raise IdempotentDefect("Spectral idempotents do not sum to 1", defect=total - unit)
    source = resolution.source if exact else resolution.source.to_float()
    rebuilt = resolution.reconstruct()
    if not rebuilt.close_to(source, check * max(1.0, source.max_abs())):
        raise ReconstructionDefect(
            "sum t_k e_k does not reconstruct x (nilpotent part)",
            witness=resolution.source,
            defect=rebuilt - source,
        )


def spectral_resolution(algebra: CommAlgebra, x: Element, tol: float = DEFAULT_TOL) -> SpectralResolution:
    """Resolution of x, eigenvalues in descending order.

    Requires the subalgebra generated by x and 1 to be associative and the
    minimal polynomial to have only real roots.
    """
    generated = subalgebra_generated(algebra, [x], with_unit=True, tol=tol)
    verdict = check_associative(algebra, span=generated, tol=tol)
    if not verdict.holds:
        raise NonAssociativeGenerated(
            f"Subalgebra generated by x in {algebra.name} is not associative",
            witness=verdict.witness,
            defect=verdict.residual,
        )
    coeffs = minimal_polynomial(algebra, x, tol)
    roots, exact = real_roots(coeffs, tol)
    source = x if exact else x.to_float()
    if not exact:
        roots = [float(r) for r in roots]
    pairs = [(simplify(t), _lagrange_idempotent(algebra, source, roots, k)) for k, t in enumerate(roots)]
    pairs.sort(key=lambda pair: float(pair[0]), reverse=True)
    resolution = SpectralResolution(pairs, x, list(coeffs), exact)
    verify_resolution(resolution, tol)
    _LOGGER.debug("Resolved element of %s into %d spectral idempotents", algebra.name, len(pairs))
    return resolution
