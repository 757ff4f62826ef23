"""Boolean decompositions and the orthogonality consequences for compatible events."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence, Tuple

from nonassoclab.algebra import CommAlgebra, Element, random_element, subalgebra_generated
from nonassoclab.const import DEFAULT_SAMPLES, DEFAULT_TOL, FAILS, HOLDS_SAMPLED
from nonassoclab.events import Event, certify_event, orthogonal, u_apply
from nonassoclab.helper.exceptions import ConditionNineFails, NotAssociative, NotOrthogonal, SpectralError
from nonassoclab.helper.util import trial_rng
from nonassoclab.identities import Verdict, check_associative
from nonassoclab.scalar import scalar_sign

_LOGGER = logging.getLogger(__name__)

SQUARE_POSITIVITY = "square-positivity"


def boolean_decomposition(algebra: CommAlgebra, e: Event, f: Event, tol: float = DEFAULT_TOL) -> Tuple[Event, Event, Event]:
    """d1 = e o f', d2 = e o f, d3 = e' o f with e = d1 + d2 and f = d2 + d3."""
    check = 0.0 if (e.exact and f.exact) else tol
    e_c, f_c = e.complement(), f.complement()
    for x, y in ((e.element, f.element), (e_c.element, f.element), (e.element, f_c.element), (e_c.element, f_c.element)):
        product = x * y
        defect = product * product - product
        if not defect.is_zero(check):
            raise ConditionNineFails("A product of e, e', f, f' is not idempotent", witness=product, defect=defect)
    d1 = certify_event(algebra, e.element * f_c.element, tol, "e o f'")
    d2 = certify_event(algebra, e.element * f.element, tol, "e o f")
    d3 = certify_event(algebra, e_c.element * f.element, tol, "e' o f")
    for x, y in combinations((d1, d2, d3), 2):
        if not orthogonal(x, y):
            raise ConditionNineFails("Decomposition parts are not orthogonal", witness=(x.element, y.element), defect=x.element * y.element)
    for total, target in ((d1.element + d2.element, e.element), (d2.element + d3.element, f.element)):
        if not total.close_to(target, check):
            raise ConditionNineFails("Decomposition does not add up", witness=target, defect=total - target)
    return d1, d2, d3


def _require_orthogonal(e: Event, f: Event) -> None:
    if not orthogonal(e, f):
        raise NotOrthogonal(f"{e.label} and {f.label} are not orthogonal", witness=(e.element, f.element), defect=e.element * f.element)


def complement_projection_defect(algebra: CommAlgebra, e: Event, f: Event, tol: float = DEFAULT_TOL) -> float:
    """Max distance among U_e' U_f', U_(e+f)' and U_f' U_e'."""
    _require_orthogonal(e, f)
    e_c, f_c = e.complement(), f.complement()
    total = certify_event(algebra, e.element + f.element, tol).complement()
    left = e_c.projection @ f_c.projection
    right = f_c.projection @ e_c.projection
    middle = total.projection
    return max(left.distance(middle), middle.distance(right), left.distance(right))


def orthogonal_commutation_defect(
    algebra: CommAlgebra,
    e: Event,
    f: Event,
    a: Optional[Element] = None,
    b: Optional[Element] = None,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
) -> float:
    """max over sampled x of |a o (b o x) - b o (a o x)| for a in U_e A, b in U_f A."""
    _require_orthogonal(e, f)
    rng = trial_rng(seed, 0)
    a = u_apply(e, a if a is not None else random_element(algebra, rng, -3, 3))
    b = u_apply(f, b if b is not None else random_element(algebra, rng, -3, 3))
    defect = 0.0
    for t in range(samples):
        x = random_element(algebra, trial_rng(seed, t + 1), -3, 3)
        defect = max(defect, (a * (b * x) - b * (a * x)).max_abs())
    return defect


def square_positivity_check(
    algebra: CommAlgebra,
    events: Sequence[Event],
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
) -> Verdict:
    """y^2 >= 0 for sampled y in the associative subalgebra the events generate."""
    from nonassoclab.spectral import spectral_resolution

    gens = [ev.element for ev in events] or [algebra.unit]
    basis = subalgebra_generated(algebra, gens, with_unit=True, tol=tol)
    verdict = check_associative(algebra, span=basis, tol=tol)
    if not verdict.holds:
        raise NotAssociative("Events generate a non-associative subalgebra", witness=verdict.witness, defect=verdict.residual)
    for t in range(samples):
        rng = trial_rng(seed, t)
        weights = [int(w) if basis[0].exact else float(w) for w in rng.integers(-3, 4, size=len(basis))]
        y = basis[0] * weights[0]
        for w, v in zip(weights[1:], basis[1:]):
            y = y + v * w
        try:
            resolution = spectral_resolution(algebra, y * y, tol)
        except SpectralError as err:
            return Verdict(SQUARE_POSITIVITY, FAILS, (y,), err.defect, seed, t + 1, detail=str(err))
        lowest = min(resolution.eigenvalues, key=float)
        if scalar_sign(lowest, tol) < 0:
            return Verdict(SQUARE_POSITIVITY, FAILS, (y,), lowest, seed, t + 1, detail="negative spectral value of y^2")
    return Verdict(SQUARE_POSITIVITY, HOLDS_SAMPLED, seed=seed, trials=samples)


@dataclass
class BridgeVerdict:
    pairwise_boolean: bool
    associative: bool
    witness: Optional[Tuple[Element, ...]] = None

    @property
    def consistent(self) -> bool:
        return self.pairwise_boolean == self.associative


def associativity_boolean_bridge(algebra: CommAlgebra, events: Sequence[Event], tol: float = DEFAULT_TOL) -> BridgeVerdict:
    """Pairwise Boolean decompositions exist iff the events generate an associative subalgebra."""
    pairwise = True
    witness = None
    for e, f in combinations(events, 2):
        try:
            boolean_decomposition(algebra, e, f, tol)
        except ConditionNineFails:
            pairwise = False
            witness = (e.element, f.element)
            break
    gens = [ev.element for ev in events] or [algebra.unit]
    verdict = check_associative(algebra, span=subalgebra_generated(algebra, gens, with_unit=True, tol=tol), tol=tol)
    bridge = BridgeVerdict(pairwise, verdict.holds, witness or (verdict.witness or None))
    if not bridge.consistent:
        _LOGGER.warning("Boolean pairs and associativity disagree on %s", algebra.name)
    return bridge
