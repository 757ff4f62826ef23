"""Certificates to and from self-contained report documents."""
from __future__ import annotations

import logging
from typing import Any, Dict, Mapping, Optional, Union

from pydantic import ValidationError

from nonassoclab.algebra import CommAlgebra, Element, algebra_to_spec, build_algebra, hermitian_matrix_algebra
from nonassoclab.const import HERMITIAN_MATRIX
from nonassoclab.helper.exceptions import ConfigurationException, ParseError
from nonassoclab.models import CertificateReport, CheckModel, Coefficients, ObjectValue, ResidualValue
from nonassoclab.ring import RingElement, StarRing, build_ring, ring_to_spec
from nonassoclab.scalar import ZERO, Scalar, format_scalar, parse_scalar

from .certificate import Certificate, Check, Residual

_LOGGER = logging.getLogger(__name__)


def coefficients(obj: Union[Element, RingElement]) -> Coefficients:
    return {label: format_scalar(c) for label, c in obj.to_dict().items()}


def parse_value(raw: Any, location: str = "") -> Scalar:
    return raw if isinstance(raw, float) else parse_scalar(raw, location)


def element_from_coefficients(algebra: CommAlgebra, coeffs: Mapping[str, Any], location: str = "") -> Element:
    try:
        return algebra.from_dict({label: parse_value(v, f"{location}.{label}") for label, v in coeffs.items()})
    except ParseError:
        raise
    except ConfigurationException as err:
        raise ParseError(str(err), location) from err


def ring_element_from_coefficients(ring: StarRing, coeffs: Mapping[str, Any], location: str = "") -> RingElement:
    values = [ZERO] * ring.dim
    for label, v in coeffs.items():
        if label not in ring.labels:
            raise ParseError(f"Unknown basis label {label!r} in {ring.name}", location)
        values[ring.labels.index(label)] = parse_value(v, f"{location}.{label}")
    return RingElement(ring, values)


def plain(value: Any) -> Any:
    """JSON-ready form of witnesses, inputs and residuals."""
    if isinstance(value, (Element, RingElement)):
        return coefficients(value)
    if hasattr(value, "element") and isinstance(value.element, Element):
        return coefficients(value.element)
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Mapping):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    try:
        return format_scalar(value)
    except (TypeError, ValueError):
        return str(value)


def residual_value(residual: Residual) -> ResidualValue:
    if residual is None:
        return ResidualValue(type="none")
    if isinstance(residual, Element):
        return ResidualValue(type="algebra", value=coefficients(residual))
    if isinstance(residual, RingElement):
        return ResidualValue(type="ring", value=coefficients(residual))
    return ResidualValue(type="scalar", value=format_scalar(residual))


def _residual_from_value(
    value: ResidualValue, ring: Optional[StarRing], algebra: Optional[CommAlgebra], location: str
) -> Residual:
    if value.type == "none":
        return None
    if value.type == "scalar":
        return parse_value(value.value, location)
    if value.type == "algebra":
        if algebra is None:
            raise ParseError("Algebra residual without an algebra", location)
        return element_from_coefficients(algebra, value.value, location)
    if ring is None:
        raise ParseError("Ring residual without a ring", location)
    return ring_element_from_coefficients(ring, value.value, location)


def certificate_to_model(cert: Certificate) -> CertificateReport:
    algebra = cert.algebra
    embed_algebra = algebra is not None and not (
        cert.ring is not None and algebra.provenance == HERMITIAN_MATRIX and algebra.info.get("n") == cert.n
    )
    return CertificateReport(
        kind=cert.kind,
        seed=cert.seed,
        ring=ring_to_spec(cert.ring) if cert.ring is not None else None,
        n=cert.n,
        algebra=algebra_to_spec(algebra) if embed_algebra else None,
        inputs=plain(cert.inputs),
        objects={
            name: ObjectValue(space="algebra" if isinstance(obj, Element) else "ring", coeffs=coefficients(obj))
            for name, obj in cert.objects.items()
        },
        checks=[
            CheckModel(
                assertion=check.assertion,
                expect=check.expect,
                passed=check.passed,
                residual=residual_value(check.residual),
                description=check.description,
            )
            for check in cert.checks
        ],
        verdict=cert.verdict,
        passed=cert.passed,
    )


def certificate_from_model(model: CertificateReport) -> Certificate:
    """Rebuild a certificate with its recorded checks, ready for replay()."""
    ring = build_ring(model.ring, "certificate.ring") if model.ring is not None else None
    if model.algebra is not None:
        algebra = build_algebra(model.algebra, "certificate.algebra")
    elif ring is not None and model.n:
        algebra = hermitian_matrix_algebra(ring, model.n)
    else:
        algebra = None
    objects: Dict[str, Union[Element, RingElement]] = {}
    for name, obj in model.objects.items():
        where = f"certificate.objects.{name}"
        if obj.space == "algebra":
            if algebra is None:
                raise ParseError("Algebra object without an algebra", where)
            objects[name] = element_from_coefficients(algebra, obj.coeffs, where)
        else:
            if ring is None:
                raise ParseError("Ring object without a ring", where)
            objects[name] = ring_element_from_coefficients(ring, obj.coeffs, where)
    checks = [
        Check(
            check.assertion,
            check.expect,
            check.passed,
            _residual_from_value(check.residual, ring, algebra, f"certificate.checks.{check.assertion}"),
            check.description,
        )
        for check in model.checks
    ]
    _LOGGER.debug("Loaded %s certificate with %d checks", model.kind, len(checks))
    return Certificate(model.kind, ring, model.n, dict(model.inputs), objects, checks, model.verdict, model.seed)


def certificate_from_report(data: Mapping[str, Any]) -> Certificate:
    try:
        model = CertificateReport.model_validate(data)
    except ValidationError as err:
        raise ParseError(f"Not a certificate report: {err.errors()[0]['msg']}", "certificate") from err
    return certificate_from_model(model)
