import pytest

from nonassoclab.algebra import build_algebra, symmetrized_algebra
from nonassoclab.const import FAILS, HOLDS_CERTIFIED, HOLDS_SAMPLED
from nonassoclab.identities import (
    JORDAN,
    LINEARIZED,
    POWER_ASSOCIATIVE,
    check_associative,
    check_formally_real_sampled,
    check_jordan_identity,
    check_power_associative,
    identity_residual,
    implication_audit,
    reverify,
)
from nonassoclab.ring import octonions, sedenions


def test_real_symmetric_matrices_are_jordan(h3_reals, seed):
    verdict = check_jordan_identity(h3_reals, mode=LINEARIZED)
    assert verdict.status == HOLDS_CERTIFIED
    assert check_jordan_identity(h3_reals, trials=10, seed=seed).status == HOLDS_SAMPLED


def test_h3_complex_not_associative(h3_complex):
    verdict = check_associative(h3_complex)
    assert verdict.status == FAILS
    x, y, z = verdict.witness
    assert not ((x * y) * z - x * (y * z)).is_zero()


def test_h2_reals_associativity(h2_reals, spin4):
    assert not check_associative(h2_reals).holds
    assert not check_associative(spin4).holds
    assert check_associative(build_algebra({"hermitian": {"ring": "complex", "n": 1}})).holds


def test_twisted_algebra_fails_power_associativity(twisted, seed):
    verdict = check_power_associative(twisted, trials=20, seed=seed)
    assert verdict.status == FAILS
    assert reverify(twisted, verdict)
    assert identity_residual(POWER_ASSOCIATIVE, verdict.witness, verdict.params) == verdict.residual


def test_power_associative_bound(h3_reals):
    with pytest.raises(ValueError):
        check_power_associative(h3_reals, degree_bound=3)


def test_twisted_algebra_not_jordan(twisted):
    verdict = check_jordan_identity(twisted, mode=LINEARIZED)
    assert verdict.status == FAILS
    assert verdict.identity == JORDAN
    assert identity_residual(JORDAN, verdict.witness) == verdict.residual


def test_symmetrized_cayley_dickson_rings_are_jordan():
    # u o v = -<u, v> 1 on imaginary units
    assert check_jordan_identity(symmetrized_algebra(octonions()), mode=LINEARIZED).holds
    assert check_jordan_identity(symmetrized_algebra(sedenions()), mode=LINEARIZED).holds


def test_split_complex_not_formally_real(h2_split_complex, seed):
    verdict = check_formally_real_sampled(h2_split_complex, trials=5, seed=seed)
    assert verdict.status == FAILS
    x, y = verdict.witness
    assert (x * x + y * y).is_zero()
    assert reverify(h2_split_complex, verdict)


def test_formally_real_sampled_holds(h3_complex, seed):
    assert check_formally_real_sampled(h3_complex, trials=5, seed=seed).status == HOLDS_SAMPLED


def test_implication_chain(h3_reals, twisted, seed):
    audit = implication_audit(h3_reals, trials=5, seed=seed)
    assert audit.consistent
    assert not audit.associative.holds
    assert audit.jordan.status == HOLDS_CERTIFIED
    twisted_audit = implication_audit(twisted, trials=20, seed=seed)
    assert twisted_audit.consistent
    assert not twisted_audit.jordan.holds


@pytest.mark.slow
def test_albert_algebra_is_jordan(h3_octonions):
    assert check_jordan_identity(h3_octonions, mode=LINEARIZED).status == HOLDS_CERTIFIED
