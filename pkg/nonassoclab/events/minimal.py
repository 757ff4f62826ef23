"""Minimal events and the spin-factor computations built on them."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Tuple

from nonassoclab.algebra import CommAlgebra, Element
from nonassoclab.const import DEFAULT_TOL
from nonassoclab.helper.exceptions import NotMinimal, NotProportional
from nonassoclab.scalar import HALF, Scalar, exact_sqrt, simplify

from .event import Event, certify_event, u_apply

_LOGGER = logging.getLogger(__name__)


def projection_rank(event: Event) -> int:
    return event.projection.rank(event.tol)


def proportionality(x: Element, e: Element, tol: float = 0.0) -> Scalar:
    """lambda with x = lambda e, or NotProportional."""
    if not (x.exact and e.exact):
        x, e = x.to_float(), e.to_float()
    pivot = max(range(len(e.coeffs)), key=lambda k: abs(float(e.coeffs[k])))
    if e.coeffs[pivot] == 0:
        raise NotProportional("Cannot factor through the zero element", witness=x)
    factor = simplify(x.coeffs[pivot] / e.coeffs[pivot])
    if not x.close_to(e * factor, tol):
        raise NotProportional(f"{x} is not a multiple of {e}", witness=x, defect=x - e * factor)
    return factor


def _require_minimal(event: Event) -> None:
    rank = projection_rank(event)
    if rank != 1:
        raise NotMinimal(f"U_e has rank {rank} for e = {event.label}", witness=event.element, defect=rank)


def minimal_event_lambdas(algebra: CommAlgebra, e: Event, f: Event) -> Tuple[Scalar, Scalar]:
    """(lambda, lambda') with U_e f = lambda e and U_e' f = lambda' e'."""
    _require_minimal(e)
    _require_minimal(f)
    tol = max(e.check_tol, f.check_tol)
    complement = e.complement()
    lam = proportionality(u_apply(e, f.element), e.element, tol)
    lam_prime = proportionality(u_apply(complement, f.element), complement.element, tol)
    _LOGGER.debug("Minimal event lambdas %s, %s", lam, lam_prime)
    return lam, lam_prime


def complement_part(algebra: CommAlgebra, e: Event, a: Element) -> Element:
    """a - U_e a - U_e' a."""
    return a - u_apply(e, a) - u_apply(e.complement(), a)


@dataclass
class StepTwoCheck:
    alpha: Scalar
    beta: Scalar
    gamma: Scalar
    product: Element
    expected: Element
    holds: bool


def spin_step_two_check(
    algebra: CommAlgebra, d: Event, e: Event, f: Event, tol: float = 1e-10
) -> StepTwoCheck:
    """(d - U_e d - U_e' d) o (f - U_e f - U_e' f) against
    (alpha/2 + beta/2 + gamma/2 - alpha beta - 1/2) 1,
    where U_e f = alpha e, U_e d = beta e and U_f d = gamma f.
    """
    for event in (d, e, f):
        _require_minimal(event)
    check = 0.0 if all(ev.exact for ev in (d, e, f)) else tol
    alpha = proportionality(u_apply(e, f.element), e.element, check)
    beta = proportionality(u_apply(e, d.element), e.element, check)
    gamma = proportionality(u_apply(f, d.element), f.element, check)
    product = complement_part(algebra, e, d.element) * complement_part(algebra, e, f.element)
    scalar = simplify(alpha * HALF + beta * HALF + gamma * HALF - alpha * beta - HALF) if check == 0.0 else (
        float(alpha) / 2 + float(beta) / 2 + float(gamma) / 2 - float(alpha) * float(beta) - 0.5
    )
    unit = algebra.unit if check == 0.0 else algebra.unit.to_float()
    expected = unit * scalar
    return StepTwoCheck(alpha, beta, gamma, product, expected, product.close_to(expected, check))


def idempotent_from_square(algebra: CommAlgebra, x: Element, tol: float = DEFAULT_TOL) -> Event:
    """d = 1/2 (1 + lambda^(-1/2) x) for x^2 = lambda 1 with lambda > 0."""
    square = x * x
    unit = algebra.unit if square.exact else algebra.unit.to_float()
    lam = proportionality(square, unit, 0.0 if square.exact else tol)
    root = exact_sqrt(lam)
    if root is None or float(lam) <= 0:
        raise NotProportional(f"x^2 = {lam} 1 is not a positive multiple of 1", witness=x, defect=lam)
    if isinstance(root, float) and x.exact:
        x = x.to_float()
        unit = algebra.unit.to_float()
    return certify_event(algebra, (unit + x / root) * (0.5 if isinstance(root, float) else HALF), tol)
