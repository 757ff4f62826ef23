"""Minimal polynomials of elements and their real roots."""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
import sympy

from nonassoclab.algebra import CommAlgebra, Element
from nonassoclab.const import DEFAULT_TOL, MERGE_ROOT_TOL
from nonassoclab.helper.exceptions import ComplexSpectrum
from nonassoclab.scalar import ONE, QSqrt5, Scalar, is_exact, field_of_all, simplify
from nonassoclab.scalar.linalg import Span, solve

_LOGGER = logging.getLogger(__name__)

_T = sympy.Symbol("t")
_SQRT5 = sympy.sqrt(5)


def minimal_polynomial(algebra: CommAlgebra, x: Element, tol: float = DEFAULT_TOL) -> List[Scalar]:
    """Ascending monic coefficients of the first dependence among 1, x, x^2, ...

    Powers are left-normed, x^(k+1) = x o x^k.
    """
    exact = x.exact
    unit = algebra.unit if exact else algebra.unit.to_float()
    powers = [unit]
    span = Span(algebra.dim, exact=exact, tol=tol)
    span.add(unit.coeffs)
    current = x
    while True:
        if span.contains(current.coeffs):
            coeffs = solve([p.coeffs for p in powers], current.coeffs, tol)
            if coeffs is None:
                # float span membership and least squares disagree only near tol
                coeffs = [float(c) for c in np.linalg.lstsq(
                    np.array([[float(v) for v in p.coeffs] for p in powers]).T,
                    np.array([float(v) for v in current.coeffs]),
                    rcond=None,
                )[0]]
            poly = [-c for c in coeffs] + [ONE if exact else 1.0]
            _LOGGER.debug("Minimal polynomial of degree %d in %s", len(poly) - 1, algebra.name)
            return [simplify(c) for c in poly]
        span.add(current.coeffs)
        powers.append(current)
        current = x * current


def _to_sympy(value: Scalar):
    if isinstance(value, QSqrt5):
        return sympy.Rational(value.p.numerator, value.p.denominator) + sympy.Rational(
            value.q.numerator, value.q.denominator
        ) * _SQRT5
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def _from_sympy(expr) -> Optional[Scalar]:
    """Exact Q(sqrt5) value of a sympy number, None if it is not in that field."""
    expr = sympy.expand(sympy.radsimp(expr))
    q = expr.coeff(_SQRT5)
    p = sympy.expand(expr - q * _SQRT5)
    if not (p.is_Rational and q.is_Rational):
        return None
    p_frac = Fraction(int(p.p), int(p.q))
    if q == 0:
        return p_frac
    return QSqrt5(p_frac, Fraction(int(q.p), int(q.q)))


def _polish(poly: Sequence[float], root: float, steps: int = 8) -> float:
    """Newton steps on the (descending) float polynomial."""
    derivative = np.polyder(poly)
    for _ in range(steps):
        slope = np.polyval(derivative, root)
        if slope == 0:
            break
        step = np.polyval(poly, root) / slope
        root -= step
        if abs(step) < 1e-15 * max(1.0, abs(root)):
            break
    return float(root)


def _float_real_roots(descending: Sequence[float], tol: float) -> List[float]:
    roots = np.roots(np.array(descending, dtype=float))
    scale = max(1.0, float(np.abs(roots).max(initial=0.0)))
    out = []
    for root in roots:
        if abs(root.imag) > max(MERGE_ROOT_TOL, tol) * scale:
            raise ComplexSpectrum(
                f"Minimal polynomial has the non-real root {complex(root):.6g}",
                defect=complex(root),
            )
        out.append(_polish(descending, float(root.real)))
    return out


def merge_roots(roots: Sequence[float], tol: float = MERGE_ROOT_TOL) -> List[float]:
    merged: List[float] = []
    for root in sorted(roots):
        if merged and abs(root - merged[-1]) <= tol * max(1.0, abs(root)):
            continue
        merged.append(root)
    return merged


def real_roots(coeffs: Sequence[Scalar], tol: float = DEFAULT_TOL) -> Tuple[List[Scalar], bool]:
    """Distinct real roots of an ascending coefficient list, and whether all are exact.

    Rational and Q(sqrt5) roots come out exact through factorisation over
    Q(sqrt5); any other factor yields float roots, and then every root is
    returned as a float.
    """
    if not is_exact(field_of_all(coeffs)):
        descending = [float(c) for c in reversed(coeffs)]
        return merge_roots(_float_real_roots(descending, tol)), False

    poly = sum((_to_sympy(c) * _T ** k for k, c in enumerate(coeffs)), sympy.Integer(0))
    _, factors = sympy.factor_list(poly, _T, extension=_SQRT5)
    exact_roots: List[Scalar] = []
    float_roots: List[float] = []
    for factor, _multiplicity in factors:
        factor_poly = sympy.Poly(factor, _T)
        degree = factor_poly.degree()
        if degree == 0:
            continue
        if degree == 1:
            a, b = factor_poly.all_coeffs()
            root = _from_sympy(-b / a)
            if root is not None:
                exact_roots.append(root)
                continue
        if all(c.is_Rational for c in factor_poly.all_coeffs()):
            real_count = factor_poly.count_roots()
            if real_count != degree:
                raise ComplexSpectrum(
                    f"Factor {factor} has {degree - real_count} non-real roots", defect=str(factor)
                )
        descending = [float(c) for c in factor_poly.all_coeffs()]
        float_roots.extend(_float_real_roots(descending, tol))
    if float_roots:
        return merge_roots([float(r) for r in exact_roots] + float_roots), False
    distinct = sorted(set(simplify(r) for r in exact_roots), key=float)
    return distinct, True


def evaluate(algebra: CommAlgebra, coeffs: Sequence[Scalar], x: Element) -> Element:
    """p(x) by Horner with the power recursion (ascending coefficients)."""
    unit = algebra.unit if x.exact else algebra.unit.to_float()
    result = unit * coeffs[-1]
    for c in reversed(coeffs[:-1]):
        result = x * result + unit * c
    return result
