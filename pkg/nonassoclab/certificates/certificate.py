"""Certificates: named assertions over embedded objects that can be replayed."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Union

from nonassoclab.algebra import CommAlgebra, Element, hermitian_matrix_algebra
from nonassoclab.helper.exceptions import NonAssocLabException, ReplayMismatch
from nonassoclab.ring import RingElement, StarRing
from nonassoclab.scalar import Scalar, scalar_sign

_LOGGER = logging.getLogger(__name__)

ZERO_RESIDUAL = "zero"
NONZERO_RESIDUAL = "nonzero"
NEGATIVE = "negative"

Residual = Union[Element, RingElement, Scalar, None]


@dataclass
class CertificateContext:
    ring: Optional[StarRing]
    algebra: Optional[CommAlgebra]
    objects: Dict[str, Union[Element, RingElement]]

    def __getitem__(self, name: str):
        return self.objects[name]


Assertion = Callable[[CertificateContext, str], Residual]

ASSERTIONS: Dict[str, Assertion] = {}


def assertion(name: str) -> Callable[[Assertion], Assertion]:
    def register(func: Assertion) -> Assertion:
        ASSERTIONS[name] = func
        return func

    return register


def evaluate_assertion(name: str, context: CertificateContext) -> Residual:
    """Run assertion `name`; "kind:arg" passes arg, usually an object name."""
    base, _, arg = name.partition(":")
    try:
        func = ASSERTIONS[base]
    except KeyError as err:
        raise NonAssocLabException(f"Unknown certificate assertion {base!r}") from err
    return func(context, arg)


def residual_is_zero(residual: Residual) -> bool:
    if residual is None:
        return True
    if isinstance(residual, (Element, RingElement)):
        return residual.is_zero()
    return residual == 0


def outcome(expect: str, residual: Residual) -> bool:
    if expect == ZERO_RESIDUAL:
        return residual_is_zero(residual)
    if expect == NONZERO_RESIDUAL:
        return not residual_is_zero(residual)
    if expect == NEGATIVE:
        return residual is not None and scalar_sign(residual) < 0
    raise NonAssocLabException(f"Unknown expectation {expect!r}")


@dataclass
class Check:
    assertion: str
    expect: str
    passed: bool
    residual: Residual = None
    description: str = ""


@dataclass
class Certificate:
    kind: str
    ring: Optional[StarRing]
    n: Optional[int] = None
    inputs: Dict[str, Any] = field(default_factory=dict)
    objects: Dict[str, Union[Element, RingElement]] = field(default_factory=dict)
    checks: List[Check] = field(default_factory=list)
    verdict: str = ""
    seed: Optional[int] = None

    @property
    def algebra(self) -> Optional[CommAlgebra]:
        for obj in self.objects.values():
            if isinstance(obj, Element):
                return obj.algebra
        return hermitian_matrix_algebra(self.ring, self.n) if (self.ring and self.n) else None

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def context(self) -> CertificateContext:
        return CertificateContext(self.ring, self.algebra, self.objects)

    def add(self, name: str, expect: str = ZERO_RESIDUAL, description: str = "") -> Check:
        residual = evaluate_assertion(name, self.context())
        check = Check(name, expect, outcome(expect, residual), residual, description)
        self.checks.append(check)
        _LOGGER.debug("%s certificate check %s: %s", self.kind, name, check.passed)
        return check

    def replay(self) -> List[Check]:
        """Re-evaluate every assertion on the embedded objects.

        Raises ReplayMismatch when an outcome or residual differs from the
        recorded one.
        """
        context = self.context()
        replayed = []
        for check in self.checks:
            residual = evaluate_assertion(check.assertion, context)
            again = Check(check.assertion, check.expect, outcome(check.expect, residual), residual, check.description)
            if again.passed != check.passed or not _same_residual(again.residual, check.residual):
                raise ReplayMismatch(
                    f"{self.kind} certificate: {check.assertion} replayed as {again.passed} "
                    f"with residual {again.residual}, recorded {check.passed} with {check.residual}"
                )
            replayed.append(again)
        return replayed


def _same_residual(a: Residual, b: Residual) -> bool:
    if isinstance(a, (Element, RingElement)) and isinstance(b, (Element, RingElement)):
        return a.coeffs == b.coeffs
    if a is None or b is None:
        return residual_is_zero(a) and residual_is_zero(b)
    return a == b
