"""Order-unit norm, positivity and moment checks on top of spectral resolutions."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from nonassoclab.algebra import CommAlgebra, Element, State, canonical_states, power
from nonassoclab.const import DEFAULT_TOL, NOT_POSITIVE, POSITIVE, UNKNOWN
from nonassoclab.helper.exceptions import NormUnavailable, SpectralError, UnknownProvenance
from nonassoclab.scalar import Scalar, scalar_sign

from .resolution import SpectralResolution, spectral_resolution

_LOGGER = logging.getLogger(__name__)


def _abs(value: Scalar) -> Scalar:
    return -value if scalar_sign(value) < 0 else value


def order_unit_norm(algebra: CommAlgebra, x: Element, tol: float = DEFAULT_TOL) -> Scalar:
    """inf{t > 0 : -t1 <= x <= t1} = max |t_k| over the resolution of x."""
    try:
        resolution = spectral_resolution(algebra, x, tol)
    except SpectralError as err:
        raise NormUnavailable(f"No spectral resolution, norm unavailable: {err}", witness=x, defect=err) from err
    return max((_abs(t) for t in resolution.eigenvalues), key=float)


def is_positive(
    algebra: CommAlgebra,
    x: Element,
    tol: float = DEFAULT_TOL,
    states: Optional[Sequence[State]] = None,
) -> str:
    """positive, not-positive or unknown.

    Spectral values decide when x has a resolution; otherwise a canonical
    state with mu(x) < 0 proves not-positive.
    """
    try:
        resolution = spectral_resolution(algebra, x, tol)
    except SpectralError as err:
        _LOGGER.debug("No resolution for positivity test: %s", err)
    else:
        if all(scalar_sign(t, tol) >= 0 for t in resolution.eigenvalues):
            return POSITIVE
        return NOT_POSITIVE
    if states is None:
        try:
            states = canonical_states(algebra)
        except UnknownProvenance:
            states = []
    for state in states:
        value = state(x) if state.exact else state(x.to_float())
        if float(value) < -tol:
            return NOT_POSITIVE
    return UNKNOWN


def moments_check(
    algebra: CommAlgebra,
    x: Element,
    state: State,
    n_max: int,
    tol: float = DEFAULT_TOL,
    resolution: Optional[SpectralResolution] = None,
) -> float:
    """max_{n <= n_max} |sum_k t_k^n mu(e_k) - mu(x^n)|."""
    resolution = resolution or spectral_resolution(algebra, x, tol)
    exact = state.exact and resolution.exact

    def evaluate(y: Element) -> Scalar:
        return state(y if exact else y.to_float())

    weights = [evaluate(e) for e in resolution.idempotents]
    defect = 0.0
    for n in range(1, n_max + 1):
        lhs = sum(
            ((t if exact else float(t)) ** n * w for t, w in zip(resolution.eigenvalues, weights)),
            0 if exact else 0.0,
        )
        rhs = evaluate(power(algebra, x, n))
        defect = max(defect, abs(float(lhs - rhs)))
    return defect


@dataclass
class JBNormCheck:
    norm_x: float
    norm_x2: float
    norm_sum: float
    square_law: bool
    monotone: bool

    @property
    def holds(self) -> bool:
        return self.square_law and self.monotone


def jb_norm_axioms(algebra: CommAlgebra, x: Element, y: Element, tol: float = DEFAULT_TOL) -> JBNormCheck:
    """||x^2|| = ||x||^2 and ||x^2|| <= ||x^2 + y^2||."""
    x2 = x * x
    norm_x = float(order_unit_norm(algebra, x, tol))
    norm_x2 = float(order_unit_norm(algebra, x2, tol))
    norm_sum = float(order_unit_norm(algebra, x2 + y * y, tol))
    scale = max(1.0, norm_sum)
    return JBNormCheck(
        norm_x,
        norm_x2,
        norm_sum,
        abs(norm_x2 - norm_x ** 2) <= tol * scale,
        norm_x2 <= norm_sum + tol * scale,
    )
