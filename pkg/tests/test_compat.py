from fractions import Fraction

import pytest

from nonassoclab.algebra import (
    diagonal_element,
    hermitian_matrix_algebra,
    matrix_unit_element,
    rank_one_projection,
    spin_event,
    spin_factor,
    trace_state,
)
from nonassoclab.compat import (
    associativity_boolean_bridge,
    boolean_decomposition,
    chain_violations,
    classify_level,
    compat_batch,
    compat_profile,
    complement_projection_defect,
    orthogonal_commutation_defect,
    random_event_pairs,
    square_positivity_check,
)
from nonassoclab.const import BOOLEAN, HOLDS_SAMPLED, INCOMPATIBLE, OPERATOR, SYMMETRIC, WEAK_ASYMMETRIC
from nonassoclab.events import certify_event
from nonassoclab.helper.exceptions import ConditionNineFails, NotAssociative, NotOrthogonal
from nonassoclab.ring import complex_numbers, reals


def event(algebra, element, label=""):
    return certify_event(algebra, element, label=label)


def diag(algebra, *indices):
    n = algebra.info["n"]
    return event(algebra, diagonal_element(algebra, [1 if k in indices else 0 for k in range(n)]))


@pytest.fixture(scope="module")
def h2_pair(h2_reals):
    e = diag(h2_reals, 0)
    p = event(h2_reals, rank_one_projection(h2_reals, 0, 1, reals().one()))
    return e, p


def test_orthogonal_pair_is_boolean(h2_reals):
    profile = compat_profile(h2_reals, diag(h2_reals, 0), diag(h2_reals, 1))
    assert all(profile.flag_list)
    assert profile.level == BOOLEAN
    assert profile.consistent


def test_non_commuting_pair_is_incompatible(h2_reals, h2_pair):
    e, p = h2_pair
    profile = compat_profile(h2_reals, e, p)
    assert not profile.flags[1]
    assert profile.level == INCOMPATIBLE
    assert profile.witnesses[1] == h2_reals.unit * Fraction(1, 2) - p.element
    assert profile.consistent


def test_equal_events_are_boolean(h3_reals):
    e = diag(h3_reals, 0, 2)
    assert compat_profile(h3_reals, e, e).level == BOOLEAN
    d1, d2, d3 = boolean_decomposition(h3_reals, e, e)
    assert d1.element.is_zero() and d3.element.is_zero()
    assert d2 == e


def test_state_readings(h2_reals, h2_pair):
    e, p = h2_pair
    states = [trace_state(h2_reals, h2_reals.unit), trace_state(h2_reals, p.element)]
    profile = compat_profile(h2_reals, diag(h2_reals, 0), diag(h2_reals, 1), states)
    assert profile.state_readings == {"c1": True, "c6": True}
    assert profile.consistent


def test_classify_level():
    flags = {k: True for k in range(1, 12)}
    assert classify_level(flags) == BOOLEAN
    flags.update({9: False, 10: False, 11: False})
    assert classify_level(flags) == OPERATOR
    flags.update({7: False, 8: False})
    assert classify_level(flags) == SYMMETRIC
    flags.update({3: False, 4: False, 5: False, 6: False})
    assert classify_level(flags) == WEAK_ASYMMETRIC
    flags.update({1: False, 2: False})
    assert classify_level(flags) == INCOMPATIBLE


def test_chain_violations_are_reported():
    flags = {k: k != 2 for k in range(1, 12)}
    violations = chain_violations(flags)
    assert any("c1=True, c2=False" in v for v in violations)
    assert not any("holds without" in v for v in violations)
    assert chain_violations({k: True for k in range(1, 12)}) == []


def test_boolean_decomposition(h3_reals):
    e, f = diag(h3_reals, 0, 1), diag(h3_reals, 1, 2)
    d1, d2, d3 = boolean_decomposition(h3_reals, e, f)
    assert d1.element == diag(h3_reals, 0).element
    assert d2.element == diag(h3_reals, 1).element
    assert d3.element == diag(h3_reals, 2).element


def test_boolean_decomposition_fails_for_non_commuting(h2_reals, h2_pair):
    with pytest.raises(ConditionNineFails):
        boolean_decomposition(h2_reals, *h2_pair)


def test_complement_projections_commute(h3_reals, spin4):
    assert complement_projection_defect(h3_reals, diag(h3_reals, 0), diag(h3_reals, 1)) == 0
    d = event(spin4, spin_event(spin4, [Fraction(3, 5), Fraction(4, 5), 0]))
    assert complement_projection_defect(spin4, d, d.complement()) == 0
    with pytest.raises(NotOrthogonal):
        complement_projection_defect(h3_reals, diag(h3_reals, 0), diag(h3_reals, 0, 1))


def test_orthogonal_blocks_operator_commute(h4_reals, h3_octonions, seed):
    e, f = diag(h4_reals, 0, 1), diag(h4_reals, 2, 3)
    assert orthogonal_commutation_defect(h4_reals, e, f, samples=4, seed=seed) == 0
    assert orthogonal_commutation_defect(h4_reals, e, f, a=e.element, b=f.element, samples=2) == 0
    a11, a22 = diag(h3_octonions, 0), diag(h3_octonions, 1)
    assert orthogonal_commutation_defect(h3_octonions, a11, a22, samples=2, seed=seed) <= 1e-12


def test_square_positivity(h3_reals, h2_reals, h2_pair, seed):
    diagonal = [diag(h3_reals, k) for k in range(3)]
    assert square_positivity_check(h3_reals, diagonal, samples=5, seed=seed).status == HOLDS_SAMPLED
    assert square_positivity_check(h3_reals, [diag(h3_reals, 0)], samples=3, seed=seed).holds
    with pytest.raises(NotAssociative):
        square_positivity_check(h2_reals, list(h2_pair), samples=2, seed=seed)


def test_associativity_boolean_bridge(h3_reals, h2_reals, h2_pair):
    diagonal = [diag(h3_reals, k) for k in range(3)]
    verdict = associativity_boolean_bridge(h3_reals, diagonal)
    assert verdict.pairwise_boolean and verdict.associative
    verdict = associativity_boolean_bridge(h2_reals, list(h2_pair))
    assert not verdict.pairwise_boolean and not verdict.associative
    assert verdict.consistent
    trivial = [event(h2_reals, h2_reals.zero()), event(h2_reals, h2_reals.unit)]
    assert associativity_boolean_bridge(h2_reals, trivial).consistent


def test_chain_audit_over_random_pairs(h3_reals, seed):
    pairs = random_event_pairs(h3_reals, 60, seed)
    batch = compat_batch(h3_reals, pairs)
    assert len(batch.profiles) == 60
    assert batch.consistent, batch.violations
    assert set(batch.level_counts) <= {BOOLEAN, INCOMPATIBLE}


def test_off_diagonal_unit_event(h2_reals):
    p = event(h2_reals, rank_one_projection(h2_reals, 0, 1, reals().one()))
    q = p.complement()
    assert compat_profile(h2_reals, p, q).level == BOOLEAN
    assert compat_profile(h2_reals, p, event(h2_reals, matrix_unit_element(h2_reals, 1, 1))).level == INCOMPATIBLE


def same_field(algebra, e, f):
    if e.exact == f.exact:
        return e, f
    return tuple(certify_event(algebra, ev.element.to_float(), label=ev.label) for ev in (e, f))


@pytest.mark.slow
@pytest.mark.parametrize(
    "build, matrix_algebra",
    [
        pytest.param(lambda: hermitian_matrix_algebra(reals(), 2), True, id="h2_reals"),
        pytest.param(lambda: hermitian_matrix_algebra(complex_numbers(), 3), True, id="h3_complex"),
        pytest.param(lambda: spin_factor(4), False, id="spin4"),
        pytest.param(lambda: spin_factor(8), False, id="spin8"),
    ],
)
def test_chain_audit_at_scale(build, matrix_algebra, seed):
    algebra = build()
    pairs = random_event_pairs(algebra, 500, seed)
    batch = compat_batch(algebra, pairs)
    assert len(batch.profiles) == 500
    assert batch.consistent, batch.violations[:3]
    for (e, f), profile in zip(pairs, batch.profiles):
        if matrix_algebra and profile.flags[1]:
            assert all(profile.flag_list)
        if profile.level != BOOLEAN:
            continue
        e, f = same_field(algebra, e, f)
        d1, d2, d3 = boolean_decomposition(algebra, e, f)
        check = 0.0 if e.exact else e.tol
        assert (d1.element + d2.element).close_to(e.element, check)
        assert (d2.element + d3.element).close_to(f.element, check)
        for d in (d1, d2, d3):
            assert (d.element * d.element).close_to(d.element, check)
