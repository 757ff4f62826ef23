"""Eleven compatibility conditions for a pair of events and their levels.

c5 is read as U_e f = e o f = U_f e. c10 is reported equal to c9
and marked derived; it is never searched for.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from nonassoclab.algebra import CommAlgebra, Element, State, mult_operator
from nonassoclab.const import (
    BOOLEAN,
    COMPAT_GROUPS,
    DEFAULT_TOL,
    INCOMPATIBLE,
    OPERATOR,
    SYMMETRIC,
    WEAK_ASYMMETRIC,
)
from nonassoclab.events import Event, evaluate_state, u_apply

_LOGGER = logging.getLogger(__name__)

DERIVED = (10,)


@dataclass
class CompatProfile:
    e: Element
    f: Element
    flags: Dict[int, bool]
    level: str
    witnesses: Dict[int, Any] = field(default_factory=dict)
    violations: List[str] = field(default_factory=list)
    state_readings: Dict[str, bool] = field(default_factory=dict)

    @property
    def flag_list(self) -> List[bool]:
        return [self.flags[k] for k in range(1, 12)]

    @property
    def consistent(self) -> bool:
        return not self.violations


def classify_level(flags: Dict[int, bool]) -> str:
    if flags[9]:
        return BOOLEAN
    if flags[7]:
        return OPERATOR
    if flags[3]:
        return SYMMETRIC
    if flags[1]:
        return WEAK_ASYMMETRIC
    return INCOMPATIBLE


def chain_violations(flags: Dict[int, bool]) -> List[str]:
    """Breaks of c11 <=> c10 <=> c9 => c8 <=> c7 => c6 <=> ... <=> c3 => c2 <=> c1."""
    violations = []
    for group in COMPAT_GROUPS:
        values = {flags[k] for k in group}
        if len(values) > 1:
            listing = ", ".join(f"c{k}={flags[k]}" for k in group)
            violations.append(f"equivalent conditions disagree: {listing}")
    for stronger, weaker in zip(COMPAT_GROUPS[::-1], COMPAT_GROUPS[-2::-1]):
        if flags[stronger[0]] and not flags[weaker[0]]:
            violations.append(f"c{stronger[0]} holds without c{weaker[0]}")
    return violations


def _as_float(event: Event) -> Event:
    return event if not event.exact else Event(event.element.to_float(), event.tol, event.label)


class _Pair:
    """Products and projections of e, e', f, f' computed once."""

    def __init__(self, e: Event, f: Event, tol: float) -> None:
        if e.exact != f.exact:
            e, f = _as_float(e), _as_float(f)
        self.e, self.f = e, f
        self.e_c, self.f_c = e.complement(), f.complement()
        self.tol = 0.0 if (e.exact and f.exact) else tol
        self.ef = e.element * f.element

    def same(self, x: Element, y: Element) -> bool:
        return x.close_to(y, self.tol)


def _decomposition_defect(pair: _Pair) -> Optional[Element]:
    """None when d1 = e o f', d2 = e o f, d3 = e' o f split e and f orthogonally."""
    e, f = pair.e.element, pair.f.element
    d1, d2, d3 = e * pair.f_c.element, pair.ef, pair.e_c.element * f
    for d in (d1, d2, d3):
        defect = d * d - d
        if not defect.is_zero(pair.tol):
            return defect
    for x, y in ((d1, d2), (d1, d3), (d2, d3)):
        product = x * y
        if not product.is_zero(pair.tol):
            return product
    for total, target in ((d1 + d2, e), (d2 + d3, f)):
        if not pair.same(total, target):
            return total - target
    return None


def _evaluate(pair: _Pair) -> Dict[int, Any]:
    """Condition number -> None when it holds, otherwise its defect."""
    e, f, e_c, f_c = pair.e, pair.f, pair.e_c, pair.f_c
    ee, fe = e.element, f.element
    defects: Dict[int, Any] = {}

    split_f = u_apply(e, fe) + u_apply(e_c, fe)
    split_e = u_apply(f, ee) + u_apply(f_c, ee)
    defects[1] = None if pair.same(split_f, fe) else split_f - fe

    e_ef = ee * pair.ef
    defects[2] = None if pair.same(e_ef, pair.ef) else e_ef - pair.ef
    defects[3] = defects[1] if defects[1] is not None else (None if pair.same(split_e, ee) else split_e - ee)

    f_ef = fe * pair.ef
    defects[4] = defects[2] if defects[2] is not None else (None if pair.same(f_ef, pair.ef) else f_ef - pair.ef)

    u_ef, u_fe = u_apply(e, fe), u_apply(f, ee)
    if not pair.same(u_ef, pair.ef):
        defects[5] = u_ef - pair.ef
    elif not pair.same(u_fe, pair.ef):
        defects[5] = u_fe - pair.ef
    else:
        defects[5] = None

    defects[6] = None
    family = (e, e_c, f, f_c)
    for a in family:
        for b in family:
            lhs, rhs = u_apply(a, b.element), u_apply(b, a.element)
            if not pair.same(lhs, rhs):
                defects[6] = lhs - rhs
                break
        if defects[6] is not None:
            break

    defects[7] = None
    for a in (e, e_c):
        for b in (f, f_c):
            ab, ba = a.projection @ b.projection, b.projection @ a.projection
            if not ab.close_to(ba, pair.tol):
                defects[7] = ab.distance(ba)
                break
        if defects[7] is not None:
            break

    t_e, t_f = mult_operator(ee.algebra, ee), mult_operator(ee.algebra, fe)
    ef_op, fe_op = t_e @ t_f, t_f @ t_e
    defects[8] = None if ef_op.close_to(fe_op, pair.tol) else ef_op.distance(fe_op)

    defects[9] = None
    for product in (pair.ef, e_c.element * fe, ee * f_c.element, e_c.element * f_c.element):
        defect = product * product - product
        if not defect.is_zero(pair.tol):
            defects[9] = defect
            break
    defects[10] = defects[9]
    defects[11] = _decomposition_defect(pair)
    return defects


def _state_readings(pair: _Pair, states: Sequence[State], tol: float) -> Dict[str, bool]:
    """Probabilistic forms of (i) and (vi) over the given states."""
    e, f = pair.e, pair.f
    split, symmetric = True, True
    for state in states:
        mu_f = float(evaluate_state(state, f.element))
        through_e = float(evaluate_state(state, u_apply(e, f.element)))
        through_ec = float(evaluate_state(state, u_apply(pair.e_c, f.element)))
        if abs(through_e + through_ec - mu_f) > tol:
            split = False
        if abs(through_e - float(evaluate_state(state, u_apply(f, e.element)))) > tol:
            symmetric = False
    return {"c1": split, "c6": symmetric}


def compat_profile(
    algebra: CommAlgebra,
    e: Event,
    f: Event,
    states: Optional[Sequence[State]] = None,
    tol: float = DEFAULT_TOL,
) -> CompatProfile:
    pair = _Pair(e, f, tol)
    defects = _evaluate(pair)
    flags = {k: defects[k] is None for k in range(1, 12)}
    profile = CompatProfile(
        e.element,
        f.element,
        flags,
        classify_level(flags),
        {k: v for k, v in defects.items() if v is not None},
        chain_violations(flags),
    )
    if states:
        profile.state_readings = _state_readings(pair, states, max(tol, 1e-9))
        if flags[1] and not profile.state_readings["c1"]:
            profile.violations.append("c1 holds but its state reading fails")
        if flags[6] and not profile.state_readings["c6"]:
            profile.violations.append("c6 holds but its state reading fails")
    if profile.violations:
        _LOGGER.error("Compatibility chain broken for %s, %s: %s", e.label, f.label, profile.violations)
    return profile
