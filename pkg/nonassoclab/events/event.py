"""Events (idempotents), their projections U_e and conditional probabilities."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from nonassoclab.algebra import CommAlgebra, Element, LinearOperator, State, mult_operator
from nonassoclab.const import DEFAULT_TOL
from nonassoclab.helper.exceptions import (
    DimensionMismatch,
    NotIdempotent,
    NotOrthogonal,
    ZeroConditioningEvent,
)
from nonassoclab.scalar import Scalar

_LOGGER = logging.getLogger(__name__)


class Event:
    """Certified idempotent e with its cached projection U_e = 2T_e^2 - T_e."""

    def __init__(self, element: Element, tol: float = DEFAULT_TOL, label: str = "") -> None:
        self.element = element
        self.tol = tol
        self.label = label or str(element)
        self._projection: Optional[LinearOperator] = None

    @property
    def algebra(self) -> CommAlgebra:
        return self.element.algebra

    @property
    def exact(self) -> bool:
        return self.element.exact

    @property
    def check_tol(self) -> float:
        return 0.0 if self.exact else self.tol

    @property
    def projection(self) -> LinearOperator:
        if self._projection is None:
            t_e = mult_operator(self.algebra, self.element)
            self._projection = (t_e @ t_e) * 2 - t_e
        return self._projection

    def complement(self) -> Event:
        """e' = 1 - e."""
        unit = self.algebra.unit if self.exact else self.algebra.unit.to_float()
        return Event(unit - self.element, self.tol, f"({self.label})'")

    def is_trivial(self) -> bool:
        unit = self.algebra.unit if self.exact else self.algebra.unit.to_float()
        return self.element.is_zero(self.check_tol) or self.element.close_to(unit, self.check_tol)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Event):
            return NotImplemented
        return self.element.close_to(other.element, max(self.check_tol, other.check_tol))

    def __hash__(self) -> int:
        return hash(self.element) if self.exact else id(self)

    def __repr__(self) -> str:
        return f"Event({self.label})"


def certify_event(algebra: CommAlgebra, e: Element, tol: float = DEFAULT_TOL, label: str = "") -> Event:
    if e.algebra.dim != algebra.dim:
        raise DimensionMismatch(f"Event candidate does not belong to {algebra.name}")
    square = e * e
    if not square.close_to(e, 0.0 if e.exact else tol):
        raise NotIdempotent(f"e o e != e for {e}", witness=e, defect=square - e)
    return Event(e, tol, label)


def u_apply(event: Event, x: Element) -> Element:
    """U_e x = 2e o (e o x) - e o x through the cached matrix."""
    if x.algebra.dim != event.algebra.dim:
        raise DimensionMismatch(f"Element of {x.algebra.name} used with an event of {event.algebra.name}")
    return event.projection.apply(x)


def _check_pair(e: Event, f: Event) -> None:
    if e.algebra.dim != f.algebra.dim:
        raise DimensionMismatch("Events belong to different algebras")


def orthogonal(e: Event, f: Event) -> bool:
    """e o f = 0."""
    _check_pair(e, f)
    return (e.element * f.element).is_zero(max(e.check_tol, f.check_tol))


def event_leq(e: Event, f: Event) -> bool:
    """e <= f iff e o f = e."""
    _check_pair(e, f)
    return (e.element * f.element).close_to(e.element, max(e.check_tol, f.check_tol))


def evaluate_state(state: State, x: Element) -> Scalar:
    """mu(x), falling back to floats when one side is inexact."""
    if state.exact and x.exact:
        return state(x)
    return float(state(x.to_float()))


def conditional_probability(
    algebra: CommAlgebra, state: State, e: Event, f: Event, tol: float = DEFAULT_TOL
) -> Scalar:
    """mu(f | e) = mu(U_e f) / mu(e)."""
    weight = evaluate_state(state, e.element)
    if float(weight) <= tol:
        raise ZeroConditioningEvent(f"mu(e) = {weight} for {state!r}", witness=e.element, defect=weight)
    return evaluate_state(state, u_apply(e, f.element)) / weight


def orthogonal_sum(algebra: CommAlgebra, events: Sequence[Event], tol: float = DEFAULT_TOL) -> Event:
    """Sum of pairwise orthogonal events, certified."""
    if not events:
        return Event(algebra.zero(), tol, "0")
    for k, e in enumerate(events):
        for f in events[k + 1:]:
            if not orthogonal(e, f):
                raise NotOrthogonal(
                    f"{e.label} and {f.label} are not orthogonal",
                    witness=(e.element, f.element),
                    defect=e.element * f.element,
                )
    total = events[0].element
    for e in events[1:]:
        total = total + e.element
    return certify_event(algebra, total, tol, " + ".join(e.label for e in events))


@dataclass
class OrthogonalityReadings:
    product_zero: bool
    complement_fixes: bool
    literal: bool

    @property
    def divergent(self) -> bool:
        """e o f = 0 and U_e' f = f disagree."""
        return self.product_zero != self.complement_fixes

    @property
    def literal_divergent(self) -> bool:
        return self.product_zero != self.literal


def orthogonality_readings(e: Event, f: Event) -> OrthogonalityReadings:
    """Three readings of e perp f: e o f = 0, U_e' f = f and U_e f = f."""
    tol = max(e.check_tol, f.check_tol)
    return OrthogonalityReadings(
        orthogonal(e, f),
        u_apply(e.complement(), f.element).close_to(f.element, tol),
        u_apply(e, f.element).close_to(f.element, tol),
    )
