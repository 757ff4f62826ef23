"""States: normalised positive functionals mu with mu(1) = 1.

At finite dimension the predual and its weak topologies carry no extra
content, so a state is just its dual coefficient vector.
"""
from __future__ import annotations

import logging
from typing import List, Optional, Sequence

import numpy as np
from scipy.optimize import linprog

from nonassoclab.const import CUSTOM, HERMITIAN_MATRIX, SPIN_FACTOR
from nonassoclab.helper.exceptions import UnknownProvenance
from nonassoclab.scalar import HALF, ONE, ZERO, Scalar, is_zero, normalize_coeffs

from .basic import CommAlgebra, Element, LinearOperator, mult_operator, random_element
from .hermitian import diagonal_element, layout_of, rank_one_projection, trace_functional
from .spin import spin_parts, unit_vectors

_LOGGER = logging.getLogger(__name__)

TRACE = "trace"
VECTOR = "vector"
SPIN_VECTOR = "spin"
SAMPLED_POSITIVE = "sampled-positive"


class State:
    """Linear functional given by its dual coefficient vector."""

    def __init__(self, algebra: CommAlgebra, functional: Sequence[Scalar], label: str = "", kind: str = "") -> None:
        self.algebra = algebra
        self.functional = normalize_coeffs(functional)
        self.label = label
        self.kind = kind

    def __call__(self, x: Element) -> Scalar:
        return sum((m * c for m, c in zip(self.functional, x.coeffs) if c != 0 and m != 0), ZERO if self.exact and x.exact else 0.0)

    @property
    def exact(self) -> bool:
        return not any(isinstance(m, float) for m in self.functional)

    @property
    def normalized(self) -> bool:
        value = self(self.algebra.unit)
        return value == 1 if self.exact else abs(float(value) - 1.0) <= 1e-9

    def compose(self, operator: LinearOperator) -> State:
        """mu o op."""
        return State(self.algebra, operator.pullback(self.functional), f"{self.label}.U", self.kind)

    def distance(self, other: State) -> float:
        return max(
            (abs(float(a) - float(b)) for a, b in zip(self.functional, other.functional)),
            default=0.0,
        )

    def __repr__(self) -> str:
        return f"State({self.label or self.kind})"


def trace_state(algebra: CommAlgebra, density: Element, label: str = "") -> Optional[State]:
    """mu_d(x) = t(d o x) / t(d) with the real trace t; None when t(d) = 0."""
    trace = trace_functional(algebra)
    norm = sum((t * c for t, c in zip(trace, density.coeffs)), ZERO)
    if is_zero(norm, 1e-12):
        return None
    functional = mult_operator(algebra, density).pullback(trace)
    return State(algebra, [m / norm for m in functional], label or f"trace[{density}]", TRACE)


def spin_state(algebra: CommAlgebra, u: Sequence[Scalar], label: str = "") -> State:
    """mu_u(s1 + w) = s + <u, w> for |u| <= 1."""
    return State(algebra, [ONE] + list(u), label or f"spin{tuple(str(c) for c in u)}", SPIN_VECTOR)


def _hermitian_densities(algebra: CommAlgebra, count: int) -> List[Element]:
    layout = layout_of(algebra)
    n = layout.n
    ring = layout.ring
    densities = [algebra.unit]
    densities += [diagonal_element(algebra, [ONE if k == i else ZERO for k in range(n)]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(ring.dim):
                projection = rank_one_projection(algebra, i, j, ring.basis(k))
                if projection is not None:
                    densities.append(projection)
    return densities[:count] if count else densities


def canonical_states(
    algebra: CommAlgebra,
    count: int = 0,
    seed: int = 0,
    samples: int = 24,
) -> List[State]:
    """Constructed states for the algebra's provenance.

    Hermitian: trace states of the identity, diagonal and rank-one densities.
    Spin: mu_u for rational unit vectors u and their midpoints.
    Custom: vertices of the cone {mu(1) = 1, mu(y^2) >= 0} over sampled squares
    (sampled-positive only).
    """
    if algebra.provenance == HERMITIAN_MATRIX:
        states = []
        for density in _hermitian_densities(algebra, count):
            state = trace_state(algebra, density)
            if state is not None:
                states.append(state)
        return states
    if algebra.provenance == SPIN_FACTOR:
        d = algebra.dim
        rng = np.random.default_rng(seed)
        vectors = unit_vectors(d, count or 2 * (d - 1) + 4, rng)
        states = [spin_state(algebra, [ZERO] * (d - 1), "spin(0)")]
        states += [spin_state(algebra, u) for u in vectors]
        for u, v in zip(vectors, vectors[1:]):
            mid = [HALF * (a + b) for a, b in zip(u, v)]
            states.append(spin_state(algebra, mid))
        return states
    if algebra.provenance == CUSTOM:
        return sampled_cone_states(algebra, samples, count or 4, seed)
    raise UnknownProvenance(f"No state construction for provenance {algebra.provenance!r}")


def sampled_cone_states(algebra: CommAlgebra, samples: int, count: int, seed: int, bound: float = 1e3) -> List[State]:
    """Vertices of the sampled state cone found by linear programming."""
    if samples <= 0:
        raise UnknownProvenance(
            f"{algebra.name}: custom algebra states need a positive square sampling budget"
        )
    rng = np.random.default_rng(seed)
    squares = [algebra.basis(i) * algebra.basis(i) for i in range(algebra.dim)]
    while len(squares) < samples:
        y = random_element(algebra, rng)
        squares.append(y * y)
    a_ub = -np.array([[float(c) for c in s.coeffs] for s in squares], dtype=float)
    b_ub = np.zeros(len(squares))
    a_eq = np.array([[float(c) for c in algebra.unit.coeffs]], dtype=float)
    b_eq = np.array([1.0])
    states: List[State] = []
    for k in range(count):
        objective = rng.normal(size=algebra.dim)
        result = linprog(
            objective,
            A_ub=a_ub,
            b_ub=b_ub,
            A_eq=a_eq,
            b_eq=b_eq,
            bounds=[(-bound, bound)] * algebra.dim,
            method="highs",
        )
        if not result.success:
            _LOGGER.debug("Sampled cone LP %d failed: %s", k, result.message)
            continue
        states.append(State(algebra, [float(v) for v in result.x], f"sampled[{k}]", SAMPLED_POSITIVE))
    if not states:
        raise UnknownProvenance(f"{algebra.name}: sampled state cone is empty")
    return states


def states_supported_on(algebra: CommAlgebra, e: Element, tol: float = 1e-9) -> List[State]:
    """States with mu(e) = 1."""
    if e.is_zero(tol):
        return []
    if algebra.provenance == HERMITIAN_MATRIX:
        state = trace_state(algebra, e, f"trace[{e}]")
        return [state] if state is not None else []
    if algebra.provenance == SPIN_FACTOR:
        s, w = spin_parts(e)
        if e.close_to(algebra.unit if e.exact else algebra.unit.to_float(), tol):
            return canonical_states(algebra)
        # e = 1/2 (1 + v) with |v| = 1
        return [spin_state(algebra, [2 * c for c in w], f"spin-supported[{e}]")]
    return [s for s in canonical_states(algebra) if abs(float(s(e)) - 1.0) <= tol]
