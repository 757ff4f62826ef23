"""Checker for the standing assumptions on the event structure of an algebra.

Unit law, norm submultiplicativity on samples, U_e as a positive projection
onto the span of the events below e, U_e invariance of the states with
mu(e) = 1, and the orthogonality readings of the event pairs.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence

from nonassoclab.algebra import CommAlgebra, State, canonical_states, random_element, states_supported_on
from nonassoclab.const import (
    DEFAULT_SAMPLES,
    DEFAULT_TOL,
    FAILED,
    NOT_POSITIVE,
    PASSED,
    SKIPPED,
    VERIFIED_AGAINST_DISCOVERED,
)
from nonassoclab.helper.exceptions import NormUnavailable, SpectralError, UnknownProvenance
from nonassoclab.helper.util import trial_rng
from nonassoclab.scalar.linalg import float_rank, is_exact_data, rank

from .event import Event, evaluate_state, event_leq, orthogonality_readings, u_apply

_LOGGER = logging.getLogger(__name__)

UNIT_LAW = "unit-law"
NORM = "norm"
POSITIVE_PROJECTION = "positive-projection"
STATE_INVARIANCE = "state-invariance"
ORTHOGONALITY = "orthogonality"
CONDITIONS = (UNIT_LAW, NORM, POSITIVE_PROJECTION, STATE_INVARIANCE, ORTHOGONALITY)


@dataclass
class ConditionResult:
    condition: str
    status: str
    witness: Optional[Dict[str, Any]] = None
    samples: int = 0
    seed: Optional[int] = None
    notes: List[str] = field(default_factory=list)

    def fail(self, witness: Dict[str, Any], note: str) -> ConditionResult:
        self.status = FAILED
        self.witness = witness
        self.notes.append(note)
        return self


@dataclass
class AssumptionsReport:
    algebra: str
    seed: int
    conditions: Dict[str, ConditionResult] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(result.status != FAILED for result in self.conditions.values())

    def failed(self) -> List[str]:
        return [name for name, result in self.conditions.items() if result.status == FAILED]


def _unit_law(algebra: CommAlgebra) -> ConditionResult:
    result = ConditionResult(UNIT_LAW, PASSED, samples=algebra.dim)
    for b in algebra.basis_elements():
        product = algebra.unit * b
        if product != b:
            return result.fail({"x": b, "defect": product - b}, f"1 o {b} != {b}")
    return result


def _norm_condition(algebra: CommAlgebra, samples: int, seed: int, tol: float) -> ConditionResult:
    from nonassoclab.spectral import order_unit_norm

    result = ConditionResult(NORM, SKIPPED, samples=0, seed=seed)
    for t in range(samples):
        rng = trial_rng(seed, t)
        x, y = random_element(algebra, rng, -2, 2), random_element(algebra, rng, -2, 2)
        try:
            norms = [float(order_unit_norm(algebra, z, tol)) for z in (x, y, x * y)]
        except NormUnavailable:
            continue
        result.samples += 1
        bound = norms[0] * norms[1]
        if norms[2] > bound + tol * max(1.0, bound):
            return result.fail(
                {"x": x, "y": y, "norm_xy": norms[2], "bound": bound},
                f"||x o y|| = {norms[2]:.6g} > ||x|| ||y|| = {bound:.6g}",
            )
    if result.samples:
        result.status = PASSED
    else:
        result.notes.append("no sampled pair had available norms")
    return result


def _range_rank(
    event: Event, algebra: CommAlgebra, events: Sequence[Event], target: int, samples: int, seed: int, tol: float
) -> int:
    """Rank of the span of discovered sub-events f <= e, sampling range elements until it reaches target."""
    from nonassoclab.spectral import spectral_resolution

    vectors = [f.element.coeffs for f in events if f.algebra.dim == algebra.dim and event_leq(f, event)]
    for t in range(max(samples, target + 2)):
        if vectors and (rank(vectors, tol) if is_exact_data(vectors) else float_rank(vectors, tol)) >= target:
            break
        z = u_apply(event, random_element(algebra, trial_rng(seed, t), -3, 3))
        try:
            resolution = spectral_resolution(algebra, z, tol)
        except SpectralError:
            continue
        for _, f in resolution.pairs:
            candidate = Event(f, tol)
            if not f.is_zero(candidate.check_tol) and event_leq(candidate, event):
                vectors.append(f.coeffs if f.exact else tuple(float(c) for c in f.coeffs))
    if not vectors:
        return 0
    if is_exact_data(vectors):
        return rank(vectors, tol)
    return float_rank([[float(c) for c in v] for v in vectors], tol)


def _positive_projection(
    algebra: CommAlgebra,
    events: Sequence[Event],
    states: Sequence[State],
    samples: int,
    seed: int,
    tol: float,
) -> ConditionResult:
    from nonassoclab.spectral import is_positive

    result = ConditionResult(POSITIVE_PROJECTION, PASSED, samples=samples, seed=seed)
    deficits = []
    for e in events:
        projection = e.projection
        if not (projection @ projection).close_to(projection, e.check_tol):
            return result.fail({"e": e.element}, f"U_e^2 != U_e for e = {e.label}")
        for f in events:
            image = u_apply(e, f.element)
            if is_positive(algebra, image, tol, states) == NOT_POSITIVE:
                return result.fail(
                    {"e": e.element, "f": f.element, "U_e f": image},
                    f"U_e f is not positive for e = {e.label}, f = {f.label}",
                )
        for t in range(samples):
            y = random_element(algebra, trial_rng(seed, t), -2, 2)
            image = u_apply(e, y * y)
            for state in states:
                value = evaluate_state(state, image)
                if float(value) < -tol:
                    return result.fail(
                        {"e": e.element, "y": y, "state": state.label, "value": value},
                        f"mu(U_e y^2) = {value} < 0 for e = {e.label}",
                    )
            if is_positive(algebra, image, tol, ()) == NOT_POSITIVE:
                return result.fail(
                    {"e": e.element, "y": y, "U_e y^2": image},
                    f"U_e y^2 is not positive for e = {e.label}",
                )
        target = projection.rank(tol)
        found = _range_rank(e, algebra, events, target, samples, seed, tol)
        if found < target:
            deficits.append(f"{e.label}: range rank {target}, sub-events span {found}")
    if deficits:
        result.status = SKIPPED
        result.notes.extend(deficits)
    else:
        result.notes.append(VERIFIED_AGAINST_DISCOVERED)
    return result


def _state_invariance(
    algebra: CommAlgebra, events: Sequence[Event], states: Sequence[State], tol: float
) -> ConditionResult:
    result = ConditionResult(STATE_INVARIANCE, SKIPPED)
    for e in events:
        candidates = [s for s in states if abs(float(evaluate_state(s, e.element)) - 1.0) <= tol]
        candidates += states_supported_on(algebra, e.element, tol)
        for state in candidates:
            result.samples += 1
            moved = state.compose(e.projection)
            same = moved.functional == state.functional if (moved.exact and state.exact) else (
                moved.distance(state) <= tol
            )
            if not same:
                return result.fail(
                    {"e": e.element, "state": state.label, "distance": moved.distance(state)},
                    f"mu o U_e != mu for e = {e.label}, mu = {state.label}",
                )
    if result.samples:
        result.status = PASSED
    else:
        result.notes.append("no state with mu(e) = 1 among the events")
    return result


def _orthogonality(events: Sequence[Event]) -> ConditionResult:
    result = ConditionResult(ORTHOGONALITY, PASSED)
    literal = 0
    for e, f in combinations(events, 2):
        result.samples += 1
        readings = orthogonality_readings(e, f)
        if readings.divergent:
            return result.fail(
                {"e": e.element, "f": f.element, "product_zero": readings.product_zero},
                f"e o f = 0 and U_e' f = f disagree for {e.label}, {f.label}",
            )
        if readings.literal_divergent:
            literal += 1
    if literal:
        result.notes.append(f"U_e f = f reading diverges from e o f = 0 on {literal} pairs")
    return result


def check_assumptions(
    algebra: CommAlgebra,
    events: Sequence[Event],
    states: Optional[Sequence[State]] = None,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
) -> AssumptionsReport:
    """Run every condition; failures become report entries, never exceptions."""
    report = AssumptionsReport(algebra.name, seed)
    if states is None:
        try:
            states = canonical_states(algebra, seed=seed)
        except UnknownProvenance as err:
            _LOGGER.warning("No canonical states for %s: %s", algebra.name, err)
            states = []
    report.conditions[UNIT_LAW] = _unit_law(algebra)
    report.conditions[NORM] = _norm_condition(algebra, samples, seed, tol)
    report.conditions[POSITIVE_PROJECTION] = _positive_projection(algebra, events, states, samples, seed, tol)
    report.conditions[STATE_INVARIANCE] = _state_invariance(algebra, events, states, tol)
    report.conditions[ORTHOGONALITY] = _orthogonality(events)
    for name, result in report.conditions.items():
        _LOGGER.info("Condition %s on %s: %s", name, algebra.name, result.status)
    return report
