"""Screening of coefficient rings R for H_n(R), and Jordan-failure searches."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Tuple

from nonassoclab.algebra import CommAlgebra, Element, hermitian_matrix_algebra, random_element
from nonassoclab.const import (
    DEFAULT_SEED,
    EXCLUDED,
    HERMITIAN_MATRIX,
    JB_CONSISTENT,
    JORDAN_FAILURE,
    NOT_COVERED,
    POSITIVE_DEFINITE,
    SPIN_DENSE,
)
from nonassoclab.events import find_golden_alpha
from nonassoclab.helper.exceptions import SearchBudgetExceeded
from nonassoclab.helper.util import trial_rng
from nonassoclab.identities import jordan_defect
from nonassoclab.ring import (
    RingElement,
    StarRing,
    alternativity_check,
    associativity_check,
    hermitian_scalar_check,
    norm_definiteness_check,
    norm_form,
    octonions,
    star,
)
from nonassoclab.scalar import ONE, exact_sqrt

from .builders import (
    alternativity_derivation_certificate,
    associativity_derivation_certificate,
    conjugation_certificate,
    golden_idempotent_certificate,
    nilpotent_violation_certificate,
)
from .certificate import NONZERO_RESIDUAL, Certificate, CertificateContext, assertion

_LOGGER = logging.getLogger(__name__)

INVOLUTION_DEPENDENCY = "verdict depends on the chosen involution"


@dataclass
class ScreenReport:
    ring: str
    n: int
    verdict: str
    reason: str
    certificates: List[Certificate] = field(default_factory=list)
    flags: List[str] = field(default_factory=list)


def find_nilpotent_alpha(ring: StarRing) -> Optional[RingElement]:
    """Nonzero alpha with alpha* alpha = alpha alpha* = 0 among e_a and e_a +- e_b."""
    candidates = [ring.basis(k) for k in range(ring.dim)]
    candidates += [
        ring.basis(a) + ring.basis(b, sign)
        for a, b in combinations(range(ring.dim), 2)
        for sign in (Fraction(1), Fraction(-1))
    ]
    for alpha in candidates:
        if norm_form(ring, alpha).is_zero() and (alpha * star(ring, alpha)).is_zero():
            return alpha
    return None


def _scaled_negative_alpha(ring: StarRing) -> Optional[RingElement]:
    """Negative norm-form witness v rescaled to v* v = -1 when the root is exact."""
    definiteness = norm_definiteness_check(ring)
    if definiteness.witness is None or definiteness.value is None or definiteness.value >= 0:
        return None
    root = exact_sqrt(-definiteness.value)
    if root is None or isinstance(root, float):
        return None
    alpha = definiteness.witness * (ONE / root)
    minus_one = -ring.one()
    if norm_form(ring, alpha) == minus_one and alpha * star(ring, alpha) == minus_one:
        return alpha
    return None


def find_alternativity_pair(ring: StarRing) -> Optional[Tuple[RingElement, RingElement]]:
    """(alpha, beta) with alpha* alpha = 1 and alpha*(alpha beta) != beta."""
    one = ring.one()
    candidates = [ring.basis(k) for k in range(ring.dim)]
    candidates += [
        ring.basis(a, Fraction(3, 5)) + ring.basis(c, Fraction(4, 5))
        for a, c in combinations(range(ring.dim), 2)
    ]
    for alpha in candidates:
        if norm_form(ring, alpha) != one or alpha * star(ring, alpha) != one:
            continue
        for b in range(ring.dim):
            beta = ring.basis(b)
            if not (star(ring, alpha) * (alpha * beta) - beta).is_zero():
                return alpha, beta
    return None


def _involution_flags(ring: StarRing) -> List[str]:
    if not any("involution" in c for c in ring.conventions):
        return []
    return [INVOLUTION_DEPENDENCY, *ring.conventions]


def _indefinite_exclusion(ring: StarRing, report: ScreenReport) -> bool:
    alpha = find_golden_alpha(ring)
    if alpha is None and hermitian_scalar_check(ring).holds:
        alpha = _scaled_negative_alpha(ring)
    if alpha is not None:
        report.certificates.append(golden_idempotent_certificate(ring, alpha))
        report.reason = "an alpha with alpha* alpha = -1 gives an idempotent whose compression is not positive"
        return True
    alpha = find_nilpotent_alpha(ring)
    if alpha is not None:
        report.certificates.append(nilpotent_violation_certificate(ring, alpha))
        report.reason = "an alpha with alpha* alpha = 0 gives an unbounded line of idempotents"
        return True
    return False


def candidate_screen(ring: StarRing, n: int) -> ScreenReport:
    """JB-consistent, spin-dense, excluded (with certificate) or not-covered."""
    if n < 1:
        raise ValueError(f"Matrix size must be positive, got {n}")
    report = ScreenReport(ring.name, n, NOT_COVERED, "")
    if not hermitian_scalar_check(ring).holds:
        if n >= 2 and _indefinite_exclusion(ring, report):
            report.verdict = EXCLUDED
        else:
            report.reason = "R_sa is larger than R1 and no golden or nilpotent witness was found"
            report.flags = _involution_flags(ring)
        return _log(report)
    if n == 1:
        report.verdict, report.reason = JB_CONSISTENT, "H_1(R) is R1"
        return _log(report)
    if norm_definiteness_check(ring).status != POSITIVE_DEFINITE:
        if _indefinite_exclusion(ring, report):
            report.verdict = EXCLUDED
        else:
            report.reason = "indefinite norm form without an exact witness"
        return _log(report)
    support = conjugation_certificate(ring)
    alternative = alternativity_check(ring)
    if n == 2:
        if alternative.holds:
            report.verdict, report.reason = JB_CONSISTENT, "alternative ring with positive definite norm"
        else:
            report.verdict, report.reason = SPIN_DENSE, "R_sa = R1 and positive definite norm give a dense subalgebra of a spin factor"
        report.certificates.append(support)
        return _log(report)
    if not alternative.holds:
        pair = find_alternativity_pair(ring)
        if pair is None:
            report.reason = f"not alternative ({alternative.detail}) but no unit-norm witness found"
            return _log(report)
        report.verdict = EXCLUDED
        report.reason = "n >= 3 requires alpha*(alpha beta) = beta for alpha* alpha = 1"
        report.certificates.append(alternativity_derivation_certificate(ring, *pair))
        return _log(report)
    if n >= 4:
        associative = associativity_check(ring)
        if not associative.holds:
            report.verdict = EXCLUDED
            report.reason = "n >= 4 requires an associative ring"
            report.certificates.append(associativity_derivation_certificate(ring, *associative.witness))
            return _log(report)
    report.verdict = JB_CONSISTENT
    report.reason = "associative ring" if n >= 4 else "alternative ring with n <= 3"
    report.certificates.append(support)
    return _log(report)


def _log(report: ScreenReport) -> ScreenReport:
    _LOGGER.info("Screen %s, n=%d: %s (%s)", report.ring, report.n, report.verdict, report.reason)
    return report


@assertion("jordan-defect")
def _jordan_defect(ctx: CertificateContext, _: str) -> Element:
    return jordan_defect(ctx["x"], ctx["y"])


def jordan_failure_search(
    algebra: CommAlgebra,
    seed: int = DEFAULT_SEED,
    budget: int = 1000,
    low: int = -2,
    high: int = 2,
    density: float = 0.25,
) -> Certificate:
    """Seeded exact search for x, y with x^2 o (x o y) != x o (x^2 o y)."""
    ring = algebra.info.get("ring") if algebra.provenance == HERMITIAN_MATRIX else None
    n = algebra.info.get("n") if ring is not None else None
    for t in range(budget):
        rng = trial_rng(seed, t)
        x = random_element(algebra, rng, low, high, density)
        y = random_element(algebra, rng, low, high, density)
        if x.is_zero() or y.is_zero():
            continue
        if jordan_defect(x, y).is_zero():
            continue
        cert = Certificate(JORDAN_FAILURE, ring, n, {"trial": t, "budget": budget}, {"x": x, "y": y}, seed=seed)
        cert.add("jordan-defect", NONZERO_RESIDUAL, "x^2 o (x o y) != x o (x^2 o y)")
        cert.verdict = "jordan-identity-fails"
        _LOGGER.info("Jordan failure in %s at trial %d", algebra.name, t)
        return cert
    raise SearchBudgetExceeded(f"No Jordan failure in {algebra.name} within {budget} trials (seed {seed})")


def h4o_jordan_failure_witness(seed: int = DEFAULT_SEED, budget: int = 1000) -> Certificate:
    return jordan_failure_search(hermitian_matrix_algebra(octonions(), 4), seed, budget)
