"""Ready-made event families for the algebras the lab builds."""
from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations
from typing import Iterator, List, Optional

from nonassoclab.algebra import (
    CommAlgebra,
    Element,
    diagonal_element,
    matrix_unit_element,
    random_element,
    rank_one_projection,
    spin_event,
)
from nonassoclab.algebra.hermitian import layout_of
from nonassoclab.algebra.spin import unit_vectors
from nonassoclab.const import DEFAULT_TOL, HERMITIAN_MATRIX, SPIN_FACTOR
from nonassoclab.helper.exceptions import SpectralError
from nonassoclab.helper.util import trial_rng
from nonassoclab.ring import RingElement, StarRing
from nonassoclab.ring.checks import norm_form, star
from nonassoclab.scalar import ONE, ZERO, QSqrt5

from .event import Event, certify_event

_LOGGER = logging.getLogger(__name__)

# (1 - sqrt5)/2 and (1 + sqrt5)/2, the roots of t^2 - t - 1
GOLDEN_LOW = QSqrt5(Fraction(1, 2), Fraction(-1, 2))
GOLDEN_HIGH = QSqrt5(Fraction(1, 2), Fraction(1, 2))


def _is_minus_one(element: RingElement) -> bool:
    return element.is_scalar() and element.scalar_part() == -1


def golden_alpha_candidates(ring: StarRing, pairs: bool = True) -> Iterator[RingElement]:
    """Basis units, then (3e_a +- 4e_b)/5: unit-norm-form directions of R."""
    for k in range(ring.dim):
        yield ring.basis(k)
    if not pairs:
        return
    for a, b in combinations(range(ring.dim), 2):
        for sign in (1, -1):
            yield ring.basis(a, Fraction(3, 5)) + ring.basis(b, Fraction(4 * sign, 5))


def find_golden_alpha(ring: StarRing, pairs: bool = True) -> Optional[RingElement]:
    """Some alpha with alpha* alpha = alpha alpha* = -1, or None."""
    for alpha in golden_alpha_candidates(ring, pairs):
        if _is_minus_one(norm_form(ring, alpha)) and _is_minus_one(alpha * star(ring, alpha)):
            return alpha
    return None


def golden_idempotent(algebra: CommAlgebra, alpha: RingElement, i: int = 0, j: int = 1) -> Element:
    """f = p a_ii + q a_jj + alpha a_ij + alpha* a_ji with p, q = (1 -+ sqrt5)/2."""
    n = layout_of(algebra).n
    values = [ZERO] * n
    values[i] = GOLDEN_LOW
    values[j] = GOLDEN_HIGH
    return diagonal_element(algebra, values) + matrix_unit_element(algebra, i, j, alpha)


def _add(events: List[Event], algebra: CommAlgebra, element: Optional[Element], label: str, tol: float) -> None:
    if element is None or any(element == ev.element for ev in events):
        return
    events.append(certify_event(algebra, element, tol, label))


def _hermitian_events(algebra: CommAlgebra, tol: float) -> List[Event]:
    layout = layout_of(algebra)
    n, ring = layout.n, layout.ring
    events: List[Event] = []

    def diag(*indices: int) -> Element:
        return diagonal_element(algebra, [ONE if k in indices else ZERO for k in range(n)])

    for i in range(n):
        _add(events, algebra, diag(i), f"a{i + 1}{i + 1}", tol)
    for i, j in combinations(range(n), 2):
        _add(events, algebra, diag(i, j), f"a{i + 1}{i + 1}+a{j + 1}{j + 1}", tol)
    for i, j in combinations(range(n), 2):
        for k in range(ring.dim):
            projection = rank_one_projection(algebra, i, j, ring.basis(k))
            _add(events, algebra, projection, f"P(e{i + 1}+{ring.labels[k]}e{j + 1})", tol)
    if n >= 2:
        alpha = find_golden_alpha(ring, pairs=False)
        if alpha is not None:
            _add(events, algebra, golden_idempotent(algebra, alpha), f"golden[{alpha}]", tol)
    return events


def _spin_events(algebra: CommAlgebra, seed: int, count: int, tol: float) -> List[Event]:
    events: List[Event] = []
    vectors = unit_vectors(algebra.dim, count or 2 * (algebra.dim - 1) + 2, trial_rng(seed, 0))
    for u in vectors:
        _add(events, algebra, spin_event(algebra, u), f"spin{tuple(str(c) for c in u)}", tol)
    return events


def spectral_events(algebra: CommAlgebra, seed: int, count: int, tol: float = DEFAULT_TOL) -> List[Event]:
    """Nontrivial spectral idempotents of seeded random elements."""
    from nonassoclab.spectral import spectral_resolution

    events: List[Event] = []
    for t in range(count):
        x = random_element(algebra, trial_rng(seed, t), -3, 3)
        try:
            resolution = spectral_resolution(algebra, x, tol)
        except SpectralError as err:
            _LOGGER.debug("No resolution for sample %d: %s", t, err)
            continue
        for value, e in resolution.pairs:
            if len(resolution.pairs) > 1:
                _add(events, algebra, e, f"spec[{t}]({value})", tol)
    return events


def default_events(algebra: CommAlgebra, seed: int = 0, count: int = 0, tol: float = DEFAULT_TOL) -> List[Event]:
    """Diagonal and rank-one events for H_n(R), spin events for spin factors,
    spectral idempotents of random elements for everything else."""
    if algebra.provenance == HERMITIAN_MATRIX:
        events = _hermitian_events(algebra, tol)
    elif algebra.provenance == SPIN_FACTOR:
        events = _spin_events(algebra, seed, count, tol)
    else:
        events = spectral_events(algebra, seed, count or 4, tol)
    _LOGGER.info("Built %d default events for %s", len(events), algebra.name)
    return events
