"""Exact deciders for power-associativity, the Jordan identity, associativity
and a sampled necessary test for formal reality."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Any, Dict, List, Optional, Sequence, Tuple

from nonassoclab.algebra import CommAlgebra, Element, random_element, subalgebra_generated
from nonassoclab.const import (
    DEFAULT_TOL,
    DEFAULT_TRIALS,
    FAILS,
    HOLDS_CERTIFIED,
    HOLDS_SAMPLED,
)
from nonassoclab.helper.exceptions import NonAssocLabException
from nonassoclab.helper.util import trial_rng
from nonassoclab.scalar import ONE, ZERO, Scalar

_LOGGER = logging.getLogger(__name__)

POWER_ASSOCIATIVE = "power-associative"
JORDAN = "jordan"
ASSOCIATIVE = "associative"
FORMALLY_REAL = "formally-real"

SAMPLED = "sampled"
LINEARIZED = "linearized"
EXHAUSTIVE = "exhaustive"

Sparse = Dict[int, Scalar]


@dataclass
class Verdict:
    identity: str
    status: str
    witness: Tuple[Element, ...] = ()
    residual: Any = None
    seed: Optional[int] = None
    trials: int = 0
    mode: str = ""
    params: Dict[str, int] = field(default_factory=dict)
    detail: str = ""

    @property
    def holds(self) -> bool:
        return self.status != FAILS


class _SparseTable:
    """Basis products as sparse dicts, for the basis-level loops."""

    def __init__(self, algebra: CommAlgebra) -> None:
        self.algebra = algebra
        self._cache: Dict[Tuple[int, int], Sparse] = {}

    def basis(self, i: int, j: int) -> Sparse:
        key = (i, j) if i <= j else (j, i)
        cached = self._cache.get(key)
        if cached is None:
            cached = {k: c for k, c in self.algebra.table.get(key, ())}
            self._cache[key] = cached
        return cached

    def mul(self, u: Sparse, v: Sparse) -> Sparse:
        out: Sparse = {}
        for i, a in u.items():
            for j, b in v.items():
                ab = a * b
                for k, c in self.basis(i, j).items():
                    out[k] = out.get(k, ZERO) + ab * c
        return {k: c for k, c in out.items() if c != 0}

    def mul_basis(self, u: Sparse, j: int) -> Sparse:
        out: Sparse = {}
        for i, a in u.items():
            for k, c in self.basis(i, j).items():
                out[k] = out.get(k, ZERO) + a * c
        return {k: c for k, c in out.items() if c != 0}


def _sub(u: Sparse, v: Sparse) -> Sparse:
    out = dict(u)
    for k, c in v.items():
        out[k] = out.get(k, ZERO) - c
    return {k: c for k, c in out.items() if c != 0}


def _add(u: Sparse, v: Sparse) -> Sparse:
    out = dict(u)
    for k, c in v.items():
        out[k] = out.get(k, ZERO) + c
    return {k: c for k, c in out.items() if c != 0}


def jordan_defect(x: Element, y: Element) -> Element:
    """x^2 o (x o y) - x o (x^2 o y)."""
    x2 = x * x
    return x2 * (x * y) - x * (x2 * y)


def associator(x: Element, y: Element, z: Element) -> Element:
    return (x * y) * z - x * (y * z)


def left_powers(x: Element, count: int) -> List[Element]:
    """[x^1, ..., x^count] with x^(k+1) = x o x^k."""
    powers = [x]
    while len(powers) < count:
        powers.append(x * powers[-1])
    return powers


def identity_residual(name: str, witness: Sequence[Element], params: Optional[Dict[str, int]] = None) -> Any:
    """Re-evaluate identity `name` at a stored witness."""
    params = params or {}
    if name == JORDAN:
        return jordan_defect(witness[0], witness[1])
    if name == ASSOCIATIVE:
        return associator(witness[0], witness[1], witness[2])
    if name == POWER_ASSOCIATIVE:
        n, m = params["n"], params["m"]
        powers = left_powers(witness[0], n + m)
        return powers[n - 1] * powers[m - 1] - powers[n + m - 1]
    if name == FORMALLY_REAL:
        if params.get("negative_square"):
            from nonassoclab.spectral import spectral_resolution

            resolution = spectral_resolution(witness[0].algebra, witness[0] * witness[0])
            return min((t for t, _ in resolution.pairs), key=float)
        total = witness[0] * witness[0]
        for x in witness[1:]:
            total = total + x * x
        # a vanishing sum of squares with a nonzero term; residual is that term
        if total.is_zero():
            return next((x for x in witness if not x.is_zero()), total)
        return total * 0
    raise NonAssocLabException(f"Unknown identity {name!r}")


def _nonzero(value: Any, tol: float = 0.0) -> bool:
    if isinstance(value, Element):
        return not value.is_zero(tol)
    return float(value) != 0.0


def reverify(algebra: CommAlgebra, verdict: Verdict, tol: float = DEFAULT_TOL) -> bool:
    """A failing verdict re-verifies when its witness still gives a nonzero residual."""
    if verdict.status != FAILS:
        return True
    residual = identity_residual(verdict.identity, verdict.witness, verdict.params)
    if not _nonzero(residual, tol):
        return False
    if isinstance(residual, Element) and isinstance(verdict.residual, Element):
        return residual.close_to(verdict.residual, tol)
    return True


def _random_pair(algebra: CommAlgebra, seed: int, index: int, low: int = -2, high: int = 2):
    rng = trial_rng(seed, index)
    return random_element(algebra, rng, low, high), random_element(algebra, rng, low, high)


def check_power_associative(
    algebra: CommAlgebra,
    degree_bound: Optional[int] = None,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
) -> Verdict:
    """x^n o x^m = x^(n+m) for seeded random rational x and n + m <= bound.

    Not multilinear, so success is holds-sampled.
    """
    if degree_bound is not None and degree_bound < 4:
        raise ValueError(f"degree_bound must be >= 4, got {degree_bound}")
    used_bound = 0
    for t in range(trials):
        x = random_element(algebra, trial_rng(seed, t), -3, 3)
        if x.is_zero():
            continue
        bound = degree_bound or max(4, len(subalgebra_generated(algebra, [x])) + 2)
        used_bound = max(used_bound, bound)
        powers = left_powers(x, bound)
        for total in range(2, bound + 1):
            for n in range(1, total // 2 + 1):
                m = total - n
                residual = powers[n - 1] * powers[m - 1] - powers[total - 1]
                if not residual.is_zero():
                    _LOGGER.info("Power associativity fails in %s at trial %d (n=%d, m=%d)", algebra.name, t, n, m)
                    return Verdict(
                        POWER_ASSOCIATIVE, FAILS, (x,), residual, seed, t + 1, SAMPLED,
                        {"n": n, "m": m}, f"x^{n} o x^{m} != x^{total}",
                    )
    return Verdict(
        POWER_ASSOCIATIVE, HOLDS_SAMPLED, seed=seed, trials=trials, mode=SAMPLED,
        params={"degree_bound": used_bound},
        detail="sampled up to the degree bound; no finite certificate exists",
    )


def _linearized_jordan(table: _SparseTable, a: int, b: int, c: int, y: int) -> Sparse:
    """Full polarisation of x^2 o (x o y) - x o (x^2 o y) in x at (a, b, c)."""
    total: Sparse = {}
    for p, q, r in ((a, b, c), (a, c, b), (b, c, a)):
        u = table.basis(p, q)
        if not u:
            continue
        first = table.mul(u, table.basis(r, y))
        second = table.mul({r: ONE}, table.mul_basis(u, y))
        total = _add(total, _sub(first, second))
    return total


def _jordan_witness_from_polar(algebra: CommAlgebra, a: int, b: int, c: int, y: int) -> Tuple[Element, Element, Element]:
    """Some subset sum x of e_a, e_b, e_c has J(x, e_y) != 0 (inclusion-exclusion)."""
    yy = algebra.basis(y)
    picks = [a, b, c]
    for size in (1, 2, 3):
        for subset in combinations(range(3), size):
            coeffs = [ZERO] * algebra.dim
            for s in subset:
                coeffs[picks[s]] += ONE
            x = Element(algebra, coeffs)
            residual = jordan_defect(x, yy)
            if not residual.is_zero():
                return x, yy, residual
    raise NonAssocLabException("Polarised Jordan defect without an unpolarised witness")


def check_jordan_identity(
    algebra: CommAlgebra,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    mode: str = SAMPLED,
) -> Verdict:
    """Jordan identity x^2 o (x o y) = x o (x^2 o y).

    `linearized` checks the full polarisation in x on all basis multisets and
    is an exact certificate; `sampled` evaluates random rational pairs.
    """
    if mode == LINEARIZED:
        table = _SparseTable(algebra)
        dim = algebra.dim
        checked = 0
        for a, b, c in combinations_with_replacement(range(dim), 3):
            for y in range(dim):
                checked += 1
                if _linearized_jordan(table, a, b, c, y):
                    x, yy, residual = _jordan_witness_from_polar(algebra, a, b, c, y)
                    _LOGGER.info("Jordan identity fails in %s at basis (%d, %d, %d; %d)", algebra.name, a, b, c, y)
                    return Verdict(
                        JORDAN, FAILS, (x, yy), residual, mode=LINEARIZED, trials=checked,
                        detail=f"polarised defect nonzero at basis ({a}, {b}, {c}; {y})",
                    )
        _LOGGER.debug("Linearized Jordan check on %s: %d basis evaluations", algebra.name, checked)
        return Verdict(JORDAN, HOLDS_CERTIFIED, mode=LINEARIZED, trials=checked)
    for t in range(trials):
        x, y = _random_pair(algebra, seed, t)
        residual = jordan_defect(x, y)
        if not residual.is_zero():
            return Verdict(JORDAN, FAILS, (x, y), residual, seed, t + 1, SAMPLED)
    return Verdict(JORDAN, HOLDS_SAMPLED, seed=seed, trials=trials, mode=SAMPLED)


def check_associative(
    algebra: CommAlgebra,
    span: Optional[Sequence[Element]] = None,
    tol: float = DEFAULT_TOL,
) -> Verdict:
    """(x o y) o z = x o (y o z) on all basis triples of A or of `span`."""
    if span is None:
        table = _SparseTable(algebra)
        dim = algebra.dim
        for i in range(dim):
            for j in range(dim):
                ij = table.basis(i, j)
                for k in range(i, dim):
                    lhs = table.mul_basis(ij, k)
                    rhs = table.mul({i: ONE}, table.basis(j, k))
                    if lhs != rhs:
                        x, y, z = algebra.basis(i), algebra.basis(j), algebra.basis(k)
                        return Verdict(
                            ASSOCIATIVE, FAILS, (x, y, z), associator(x, y, z), mode=EXHAUSTIVE,
                            detail=f"basis triple ({algebra.labels[i]}, {algebra.labels[j]}, {algebra.labels[k]})",
                        )
        return Verdict(ASSOCIATIVE, HOLDS_CERTIFIED, mode=EXHAUSTIVE)
    vectors = list(span)
    exact = all(v.exact for v in vectors)
    for i, x in enumerate(vectors):
        for y in vectors:
            xy = x * y
            for z in vectors[i:]:
                residual = xy * z - x * (y * z)
                if not residual.is_zero(0.0 if exact else tol):
                    return Verdict(ASSOCIATIVE, FAILS, (x, y, z), residual, mode=EXHAUSTIVE, detail="span basis triple")
    return Verdict(ASSOCIATIVE, HOLDS_CERTIFIED if exact else HOLDS_SAMPLED, mode=EXHAUSTIVE)


def _negative_square(algebra: CommAlgebra, x: Element, tol: float) -> Optional[Scalar]:
    from nonassoclab.helper.exceptions import SpectralError
    from nonassoclab.spectral import spectral_resolution

    try:
        resolution = spectral_resolution(algebra, x * x, tol)
    except SpectralError:
        return None
    lowest = min((t for t, _ in resolution.pairs), key=float)
    if (float(lowest) < -tol) if isinstance(lowest, float) else lowest < 0:
        return lowest
    return None


def check_formally_real_sampled(
    algebra: CommAlgebra,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
) -> Verdict:
    """Necessary conditions for formal reality.

    Rejects a vanishing sum of squares with a nonzero term, or a square with
    a negative spectral value. Basis vectors and their pairwise sums and
    differences are probed before the random trials.
    """
    basis = algebra.basis_elements()
    squares = [b * b for b in basis]
    for i, j in combinations(range(algebra.dim), 2):
        if (squares[i] + squares[j]).is_zero():
            witness = (basis[i], basis[j])
            return Verdict(FORMALLY_REAL, FAILS, witness, basis[i], seed, 0, SAMPLED, {}, "sum of two squares vanishes")
    probes = list(basis)
    probes += [basis[i] + s * basis[j] for i, j in combinations(range(algebra.dim), 2) for s in (ONE, -ONE)]
    for x in probes:
        lowest = _negative_square(algebra, x, tol)
        if lowest is not None:
            return Verdict(
                FORMALLY_REAL, FAILS, (x,), lowest, seed, 0, SAMPLED, {"negative_square": 1},
                f"x^2 has spectral value {lowest}",
            )
    for t in range(trials):
        x, y = _random_pair(algebra, seed, t)
        total = x * x + y * y
        if total.is_zero() and not (x.is_zero() and y.is_zero()):
            return Verdict(FORMALLY_REAL, FAILS, (x, y), x if not x.is_zero() else y, seed, t + 1, SAMPLED)
        lowest = _negative_square(algebra, x, tol)
        if lowest is not None:
            return Verdict(
                FORMALLY_REAL, FAILS, (x,), lowest, seed, t + 1, SAMPLED, {"negative_square": 1},
                f"x^2 has spectral value {lowest}",
            )
    return Verdict(FORMALLY_REAL, HOLDS_SAMPLED, seed=seed, trials=trials, mode=SAMPLED)


@dataclass
class ImplicationAudit:
    associative: Verdict
    jordan: Verdict
    power_associative: Verdict

    @property
    def consistent(self) -> bool:
        if self.associative.holds and not self.jordan.holds:
            return False
        if self.jordan.holds and not self.power_associative.holds:
            return False
        return True


def implication_audit(
    algebra: CommAlgebra,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
    jordan_mode: str = LINEARIZED,
) -> ImplicationAudit:
    """associative => Jordan => power-associative, checked on one algebra."""
    audit = ImplicationAudit(
        check_associative(algebra),
        check_jordan_identity(algebra, trials, seed, jordan_mode),
        check_power_associative(algebra, trials=trials, seed=seed),
    )
    if not audit.consistent:
        _LOGGER.error("Implication chain broken on %s", algebra.name)
    return audit
