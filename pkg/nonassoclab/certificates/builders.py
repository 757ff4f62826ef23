"""Exact constructions behind the exclusion results for H_n(R).

Each builder places its objects in a Certificate and records checks through
registered assertions, so a deserialised certificate re-derives every
residual from the objects alone.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import List

from nonassoclab.algebra import Element, diagonal_element, hermitian_matrix_algebra, matrix_unit_element
from nonassoclab.const import ALTERNATIVITY, ASSOCIATIVITY, CONJUGATION, GOLDEN, NILPOTENT
from nonassoclab.events import GOLDEN_LOW, golden_idempotent
from nonassoclab.helper.exceptions import (
    CertificatePreconditionError,
    NormNotMinusOne,
    NormNotOne,
    NormNotZero,
    NotScalarHermitian,
    SpectralError,
)
from nonassoclab.ring import RingElement, StarRing, hermitian_scalar_check, norm_form, star
from nonassoclab.scalar import HALF, ONE, ZERO

from .certificate import (
    NEGATIVE,
    NONZERO_RESIDUAL,
    ZERO_RESIDUAL,
    Certificate,
    CertificateContext,
    assertion,
)

_LOGGER = logging.getLogger(__name__)

QUARTER = Fraction(1, 4)


def compress(e: Element, x: Element) -> Element:
    """U_e x = 2e o (e o x) - e o x."""
    ex = e * x
    return e * ex * 2 - ex


def _diag(algebra, *ones: int) -> Element:
    n = algebra.info["n"]
    return diagonal_element(algebra, [ONE if k in ones else ZERO for k in range(n)])


def _alt_constraint(alpha: RingElement, beta: RingElement) -> RingElement:
    """alpha*(alpha beta) - beta."""
    return star(alpha.ring, alpha) * (alpha * beta) - beta


def _associator(alpha: RingElement, beta: RingElement, gamma: RingElement) -> RingElement:
    """alpha(beta gamma) - (alpha beta)gamma."""
    return alpha * (beta * gamma) - (alpha * beta) * gamma


@assertion("norm-plus-one")
def _norm_plus_one(ctx: CertificateContext, name: str) -> RingElement:
    alpha = ctx[name]
    return norm_form(ctx.ring, alpha) + ctx.ring.one()


@assertion("conorm-plus-one")
def _conorm_plus_one(ctx: CertificateContext, name: str) -> RingElement:
    alpha = ctx[name]
    return alpha * star(ctx.ring, alpha) + ctx.ring.one()


@assertion("norm-minus-one")
def _norm_minus_one(ctx: CertificateContext, name: str) -> RingElement:
    return norm_form(ctx.ring, ctx[name]) - ctx.ring.one()


@assertion("norm")
def _norm(ctx: CertificateContext, name: str) -> RingElement:
    return norm_form(ctx.ring, ctx[name])


@assertion("conorm")
def _conorm(ctx: CertificateContext, name: str) -> RingElement:
    alpha = ctx[name]
    return alpha * star(ctx.ring, alpha)


@assertion("value")
def _value(ctx: CertificateContext, name: str):
    return ctx[name]


@assertion("idempotent")
def _idempotent(ctx: CertificateContext, name: str) -> Element:
    e = ctx[name]
    return e * e - e


@assertion("square")
def _square(ctx: CertificateContext, name: str) -> Element:
    return ctx[name] * ctx[name]


@assertion("golden-compression")
def _golden_compression(ctx: CertificateContext, _: str) -> Element:
    return compress(ctx["e"], ctx["f"]) - ctx["e"] * GOLDEN_LOW


@assertion("compression-spectrum")
def _compression_spectrum(ctx: CertificateContext, _: str):
    from nonassoclab.spectral import spectral_resolution

    image = compress(ctx["e"], ctx["f"])
    try:
        resolution = spectral_resolution(ctx.algebra, image)
    except SpectralError:
        return None
    return min(resolution.eigenvalues, key=float)


@assertion("half-eigenvector")
def _half_eigenvector(ctx: CertificateContext, _: str) -> Element:
    return ctx["e"] * ctx["x"] - ctx["x"] * HALF


@assertion("idempotent-line")
def _idempotent_line(ctx: CertificateContext, _: str) -> Element:
    """(e + s x)^2 - (e + s x) at s = 1, 2, 3; a quadratic in s vanishing there vanishes for all s."""
    e, x = ctx["e"], ctx["x"]
    residual = e * ZERO
    for s in (1, 2, 3):
        point = e + x * s
        residual = point * point - point
        if not residual.is_zero():
            return residual
    return residual


@assertion("compression-formula")
def _compression_formula(ctx: CertificateContext, _: str) -> Element:
    """16 f o U_e x - (c a23 + c* a32) with c = alpha*(alpha beta) - beta."""
    c = _alt_constraint(ctx["alpha"], ctx["beta"])
    lhs = ctx["f"] * compress(ctx["e"], ctx["x"]) * 16
    return lhs - matrix_unit_element(ctx.algebra, 1, 2, c)


@assertion("alternative-constraint")
def _alternative_constraint(ctx: CertificateContext, _: str) -> RingElement:
    return _alt_constraint(ctx["alpha"], ctx["beta"])


@assertion("in-range")
def _in_range(ctx: CertificateContext, arg: str) -> Element:
    """arg = "x@e": U_e x - x."""
    x_name, _, e_name = arg.partition("@")
    return compress(ctx[e_name], ctx[x_name]) - ctx[x_name]


@assertion("orthogonal")
def _orthogonal(ctx: CertificateContext, arg: str) -> Element:
    a, _, b = arg.partition("@")
    return ctx[a] * ctx[b]


@assertion("operator-commutator-formula")
def _operator_commutator_formula(ctx: CertificateContext, _: str) -> Element:
    """x o (z o y) - z o (x o y) - 1/4 (a a14 + a* a41), a the associator of alpha, beta, gamma."""
    x, y, z = ctx["x"], ctx["y"], ctx["z"]
    a = _associator(ctx["alpha"], ctx["beta"], ctx["gamma"])
    defect = x * (z * y) - z * (x * y)
    return defect - matrix_unit_element(ctx.algebra, 0, 3, a) * QUARTER


@assertion("associator")
def _associator_check(ctx: CertificateContext, _: str) -> RingElement:
    return _associator(ctx["alpha"], ctx["beta"], ctx["gamma"])


@assertion("anti-fixed")
def _anti_fixed(ctx: CertificateContext, name: str) -> RingElement:
    j = ctx[name]
    return star(ctx.ring, j) + j


@assertion("fixed")
def _fixed(ctx: CertificateContext, name: str) -> RingElement:
    a = ctx[name]
    return star(ctx.ring, a) - a


@assertion("proof-sign")
def _proof_sign(ctx: CertificateContext, name: str) -> RingElement:
    """-t j - j* with t = j* j."""
    j = ctx[name]
    t = norm_form(ctx.ring, j)
    return -(t * j) - star(ctx.ring, j)


@assertion("proof-square")
def _proof_square(ctx: CertificateContext, name: str) -> RingElement:
    t = norm_form(ctx.ring, ctx[name])
    return t * t - ctx.ring.one()


def _require_scalar_hermitian(ring: StarRing) -> None:
    verdict = hermitian_scalar_check(ring)
    if not verdict.holds:
        raise NotScalarHermitian(f"{ring.name}: {verdict.detail}", witness=verdict.witness)


def golden_idempotent_certificate(ring: StarRing, alpha: RingElement) -> Certificate:
    """e = a11 and the golden idempotent f in H_2(R); U_e f = (1 - sqrt5)/2 e is not positive."""
    norm, conorm = norm_form(ring, alpha), alpha * star(ring, alpha)
    minus_one = -ring.one()
    if norm != minus_one or conorm != minus_one:
        raise NormNotMinusOne(f"alpha* alpha = {norm}, alpha alpha* = {conorm}", witness=alpha, defect=norm)
    algebra = hermitian_matrix_algebra(ring, 2)
    cert = Certificate(GOLDEN, ring, 2, {"alpha": alpha.to_dict()})
    cert.objects = {"alpha": alpha, "e": _diag(algebra, 0), "f": golden_idempotent(algebra, alpha)}
    cert.add("norm-plus-one:alpha", description="alpha* alpha = -1")
    cert.add("conorm-plus-one:alpha", description="alpha alpha* = -1")
    cert.add("idempotent:e", description="e o e = e")
    cert.add("idempotent:f", description="f o f = f over Q(sqrt5)")
    cert.add("golden-compression", description="U_e f = (1 - sqrt5)/2 e")
    cert.add("compression-spectrum", NEGATIVE, "U_e f has the negative spectral value (1 - sqrt5)/2")
    cert.verdict = "not-positive" if cert.passed else "inconclusive"
    _LOGGER.info("Golden certificate for %s: %s", ring.name, cert.verdict)
    return cert


def nilpotent_violation_certificate(ring: StarRing, alpha: RingElement) -> Certificate:
    """x = alpha a12 + alpha* a21 with x^2 = 0 and e o x = x/2 puts e + s x in E for every s."""
    if alpha.is_zero():
        raise CertificatePreconditionError("alpha must be nonzero", witness=alpha)
    norm, conorm = norm_form(ring, alpha), alpha * star(ring, alpha)
    if not (norm.is_zero() and conorm.is_zero()):
        raise NormNotZero(f"alpha* alpha = {norm}, alpha alpha* = {conorm}", witness=alpha, defect=norm)
    algebra = hermitian_matrix_algebra(ring, 2)
    cert = Certificate(NILPOTENT, ring, 2, {"alpha": alpha.to_dict()})
    cert.objects = {"alpha": alpha, "e": _diag(algebra, 0), "x": matrix_unit_element(algebra, 0, 1, alpha)}
    cert.add("value:alpha", NONZERO_RESIDUAL, "alpha != 0")
    cert.add("norm:alpha", description="alpha* alpha = 0")
    cert.add("conorm:alpha", description="alpha alpha* = 0")
    cert.add("square:x", description="x o x = 0")
    cert.add("half-eigenvector", description="e o x = x/2")
    cert.add("idempotent-line", description="(e + s x)^2 = e + s x for all real s")
    cert.verdict = "unbounded-idempotent-family" if cert.passed else "inconclusive"
    return cert


def alternativity_derivation_certificate(ring: StarRing, alpha: RingElement, beta: RingElement) -> Certificate:
    """In H_3(R): 16 f o U_e x = c a23 + c* a32 with c = alpha*(alpha beta) - beta."""
    _require_scalar_hermitian(ring)
    norm = norm_form(ring, alpha)
    if norm != ring.one() or alpha * star(ring, alpha) != ring.one():
        raise NormNotOne(f"alpha* alpha = {norm}", witness=alpha, defect=norm)
    algebra = hermitian_matrix_algebra(ring, 3)
    e = (_diag(algebra, 0, 1) + matrix_unit_element(algebra, 0, 1, alpha)) * HALF
    cert = Certificate(ALTERNATIVITY, ring, 3, {"alpha": alpha.to_dict(), "beta": beta.to_dict()})
    cert.objects = {
        "alpha": alpha,
        "beta": beta,
        "e": e,
        "x": matrix_unit_element(algebra, 1, 2, beta),
        "f": _diag(algebra, 2),
    }
    cert.add("norm-minus-one:alpha", description="alpha* alpha = 1")
    cert.add("idempotent:e", description="e o e = e")
    cert.add("idempotent:f", description="f o f = f")
    cert.add("compression-formula", description="16 f o U_e x = c a23 + c* a32")
    violated = not _alt_constraint(alpha, beta).is_zero()
    cert.add(
        "alternative-constraint",
        NONZERO_RESIDUAL if violated else ZERO_RESIDUAL,
        "alpha*(alpha beta) != beta" if violated else "alpha*(alpha beta) = beta",
    )
    cert.verdict = "constraint-violated" if violated else "constraint-holds"
    return cert


def associativity_derivation_certificate(
    ring: StarRing, alpha: RingElement, beta: RingElement, gamma: RingElement
) -> Certificate:
    """In H_4(R): x o (z o y) - z o (x o y) = 1/4 (a a14 + a* a41), a = alpha(beta gamma) - (alpha beta)gamma."""
    algebra = hermitian_matrix_algebra(ring, 4)
    cert = Certificate(
        ASSOCIATIVITY,
        ring,
        4,
        {"alpha": alpha.to_dict(), "beta": beta.to_dict(), "gamma": gamma.to_dict()},
    )
    cert.objects = {
        "alpha": alpha,
        "beta": beta,
        "gamma": gamma,
        "x": matrix_unit_element(algebra, 0, 1, alpha),
        "y": matrix_unit_element(algebra, 1, 2, beta),
        "z": matrix_unit_element(algebra, 2, 3, gamma),
        "e": _diag(algebra, 0, 1),
        "f": _diag(algebra, 2, 3),
    }
    cert.add("orthogonal:e@f", description="e o f = 0")
    cert.add("in-range:x@e", description="x lies in U_e A")
    cert.add("in-range:z@f", description="z lies in U_f A")
    cert.add("operator-commutator-formula", description="x o (z o y) - z o (x o y) = 1/4 (a a14 + a* a41)")
    violated = not _associator(alpha, beta, gamma).is_zero()
    cert.add(
        "associator",
        NONZERO_RESIDUAL if violated else ZERO_RESIDUAL,
        "alpha(beta gamma) != (alpha beta)gamma" if violated else "alpha(beta gamma) = (alpha beta)gamma",
    )
    cert.verdict = "associator-nonzero" if violated else "associative-triple"
    return cert


def imaginary_units(ring: StarRing) -> List[int]:
    """Basis indices j != 1 with j^2 = -1."""
    minus_one = -ring.one()
    return [k for k in range(ring.dim) if k != ring.unit and ring.basis(k) * ring.basis(k) == minus_one]


def conjugation_certificate(ring: StarRing) -> Certificate:
    """1* = 1 and j* = -j for every basis j with j^2 = -1, with t = j* j, -t j = j*, t^2 = 1."""
    _require_scalar_hermitian(ring)
    cert = Certificate(CONJUGATION, ring)
    cert.objects = {"one": ring.one()}
    cert.add("fixed:one", description="1* = 1")
    for k in imaginary_units(ring):
        name = f"j{k}"
        cert.objects[name] = ring.basis(k)
        label = ring.labels[k]
        cert.add(f"anti-fixed:{name}", description=f"{label}* = -{label}")
        cert.add(f"proof-sign:{name}", description=f"-t {label} = {label}* for t = {label}* {label}")
        cert.add(f"proof-square:{name}", description="t^2 = 1")
    cert.verdict = "conjugation-consistent" if cert.passed else "conjugation-inconsistent"
    return cert
