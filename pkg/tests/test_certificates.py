import pytest

from nonassoclab.certificates import (
    NEGATIVE,
    NONZERO_RESIDUAL,
    alternativity_derivation_certificate,
    associativity_derivation_certificate,
    certificate_from_report,
    certificate_to_model,
    conjugation_certificate,
    find_alternativity_pair,
    golden_idempotent_certificate,
    imaginary_units,
    nilpotent_violation_certificate,
)
from nonassoclab.const import ALTERNATIVITY, ASSOCIATIVITY, GOLDEN, NILPOTENT
from nonassoclab.events import GOLDEN_LOW
from nonassoclab.helper.exceptions import (
    CertificatePreconditionError,
    NormNotMinusOne,
    NormNotOne,
    NormNotZero,
    NotScalarHermitian,
    ParseError,
    ReplayMismatch,
)
from nonassoclab.ring import associativity_check, bioctonions, complex_numbers, octonions, sedenions, split_complex


@pytest.fixture(scope="module")
def golden():
    ring = split_complex()
    return golden_idempotent_certificate(ring, ring.basis_by_label("j"))


def _check(cert, name):
    return next(check for check in cert.checks if check.assertion == name)


def test_golden_certificate(golden):
    assert golden.kind == GOLDEN
    assert golden.n == 2
    assert golden.passed
    assert golden.verdict == "not-positive"
    spectrum = _check(golden, "compression-spectrum")
    assert spectrum.expect == NEGATIVE
    assert spectrum.residual == GOLDEN_LOW


def test_golden_certificate_replays(golden):
    replayed = golden.replay()
    assert [check.assertion for check in replayed] == [check.assertion for check in golden.checks]
    assert all(check.passed for check in replayed)


def test_golden_requires_minus_one():
    ring = split_complex()
    with pytest.raises(NormNotMinusOne):
        golden_idempotent_certificate(ring, ring.one())


def test_nilpotent_certificate():
    ring = split_complex()
    cert = nilpotent_violation_certificate(ring, ring.one() + ring.basis_by_label("j"))
    assert cert.kind == NILPOTENT
    assert cert.passed
    assert cert.verdict == "unbounded-idempotent-family"
    assert _check(cert, "value:alpha").expect == NONZERO_RESIDUAL
    cert.replay()


def test_nilpotent_preconditions():
    ring = split_complex()
    with pytest.raises(CertificatePreconditionError):
        nilpotent_violation_certificate(ring, ring.one() * 0)
    with pytest.raises(NormNotZero):
        nilpotent_violation_certificate(ring, ring.basis_by_label("j"))


def test_alternativity_holds_in_octonions():
    ring = octonions()
    cert = alternativity_derivation_certificate(ring, ring.basis(1), ring.basis(2))
    assert cert.kind == ALTERNATIVITY
    assert cert.n == 3
    assert cert.passed
    assert cert.verdict == "constraint-holds"


def test_alternativity_violated_in_sedenions():
    ring = sedenions()
    pair = find_alternativity_pair(ring)
    assert pair is not None
    cert = alternativity_derivation_certificate(ring, *pair)
    assert cert.verdict == "constraint-violated"
    constraint = _check(cert, "alternative-constraint")
    assert constraint.expect == NONZERO_RESIDUAL
    assert constraint.passed


def test_alternativity_preconditions():
    ring = octonions()
    with pytest.raises(NormNotOne):
        alternativity_derivation_certificate(ring, ring.one() * 2, ring.basis(1))
    tensor = bioctonions("right")
    with pytest.raises(NotScalarHermitian):
        alternativity_derivation_certificate(tensor, tensor.one(), tensor.one())


def test_associativity_certificate_octonions():
    ring = octonions()
    verdict = associativity_check(ring)
    assert not verdict.holds
    cert = associativity_derivation_certificate(ring, *verdict.witness)
    assert cert.kind == ASSOCIATIVITY
    assert cert.n == 4
    assert cert.passed
    assert cert.verdict == "associator-nonzero"
    cert.replay()


def test_associativity_certificate_associative_triple():
    ring = complex_numbers()
    i = ring.basis(1)
    cert = associativity_derivation_certificate(ring, i, i, ring.one())
    assert cert.passed
    assert cert.verdict == "associative-triple"


def test_conjugation_certificate():
    ring = octonions()
    assert imaginary_units(ring) == list(range(1, 8))
    cert = conjugation_certificate(ring)
    assert cert.passed
    assert cert.verdict == "conjugation-consistent"
    assert len(cert.checks) == 1 + 3 * 7


def test_report_round_trip_replays(golden):
    data = certificate_to_model(golden).model_dump(by_alias=True)
    assert data["schema"] == 1
    assert data["report"] == "certificate"
    loaded = certificate_from_report(data)
    assert loaded.kind == GOLDEN
    assert loaded.verdict == golden.verdict
    assert loaded.ring.name == golden.ring.name
    assert len(loaded.replay()) == len(golden.checks)


def test_tampered_certificate_fails_replay(golden):
    data = certificate_to_model(golden).model_dump(by_alias=True)
    data["objects"]["f"] = data["objects"]["e"]
    loaded = certificate_from_report(data)
    with pytest.raises(ReplayMismatch):
        loaded.replay()


def test_not_a_certificate():
    with pytest.raises(ParseError):
        certificate_from_report({"schema": 1, "report": "certificate"})
