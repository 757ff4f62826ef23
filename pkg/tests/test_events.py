from fractions import Fraction

import pytest

from nonassoclab.algebra import (
    hermitian_matrix_algebra,
    matrix_unit_element,
    rank_one_projection,
    spin_event,
    spin_factor,
    trace_state,
)
from nonassoclab.compat import random_event_pairs
from nonassoclab.const import FAILED, PASSED
from nonassoclab.events import (
    GOLDEN_LOW,
    ORTHOGONALITY,
    POSITIVE_PROJECTION,
    UNIT_LAW,
    certify_event,
    check_assumptions,
    conditional_probability,
    default_events,
    event_leq,
    find_golden_alpha,
    golden_idempotent,
    idempotent_from_square,
    minimal_event_lambdas,
    orthogonal_sum,
    orthogonality_readings,
    projection_rank,
    proportionality,
    spin_step_two_check,
    u_apply,
)
from nonassoclab.helper.exceptions import (
    NotIdempotent,
    NotMinimal,
    NotOrthogonal,
    NotProportional,
    ZeroConditioningEvent,
)
from nonassoclab.helper.util import trial_rng
from nonassoclab.ring import complex_numbers, octonions, reals, split_complex


@pytest.fixture(scope="module")
def h2_events(h2_reals):
    e = certify_event(h2_reals, matrix_unit_element(h2_reals, 0, 0), label="a11")
    f = certify_event(h2_reals, matrix_unit_element(h2_reals, 1, 1), label="a22")
    p = certify_event(h2_reals, rank_one_projection(h2_reals, 0, 1, reals().one()), label="p")
    return e, f, p


def test_certify_rejects_non_idempotents(h2_reals):
    with pytest.raises(NotIdempotent) as err:
        certify_event(h2_reals, h2_reals.unit * 2)
    assert err.value.defect == h2_reals.unit * 2


def test_projection_and_complement(h2_reals, h2_events):
    e, f, p = h2_events
    assert u_apply(e, h2_reals.unit) == e.element
    assert e.complement() == f
    assert projection_rank(e) == 1
    assert projection_rank(certify_event(h2_reals, h2_reals.unit)) == 3
    assert event_leq(e, certify_event(h2_reals, h2_reals.unit))


def test_minimal_lambdas(h2_reals, h2_events):
    e, _, p = h2_events
    assert minimal_event_lambdas(h2_reals, e, p) == (Fraction(1, 2), Fraction(1, 2))
    with pytest.raises(NotMinimal):
        minimal_event_lambdas(h2_reals, certify_event(h2_reals, h2_reals.unit), p)


def test_proportionality(h2_reals, h2_events):
    e, f, _ = h2_events
    assert proportionality(e.element * 3, e.element) == 3
    with pytest.raises(NotProportional):
        proportionality(h2_reals.unit, e.element)


def test_orthogonality_readings(h2_events):
    e, f, p = h2_events
    readings = orthogonality_readings(e, f)
    assert readings.product_zero
    assert readings.complement_fixes
    assert not readings.literal
    assert not readings.divergent
    assert readings.literal_divergent
    assert not orthogonality_readings(e, p).product_zero


def test_orthogonal_sum(h2_reals, h2_events):
    e, f, p = h2_events
    assert orthogonal_sum(h2_reals, [e, f]).element == h2_reals.unit
    with pytest.raises(NotOrthogonal):
        orthogonal_sum(h2_reals, [e, p])


def test_conditional_probability(h2_reals, h2_events):
    e, f, p = h2_events
    tracial = trace_state(h2_reals, h2_reals.unit)
    assert conditional_probability(h2_reals, tracial, e, p) == Fraction(1, 2)
    supported_on_f = trace_state(h2_reals, f.element)
    with pytest.raises(ZeroConditioningEvent):
        conditional_probability(h2_reals, supported_on_f, e, p)


def test_spin_step_two(spin4):
    d = certify_event(spin4, spin_event(spin4, [Fraction(3, 5), Fraction(4, 5), 0]))
    e = certify_event(spin4, spin_event(spin4, [1, 0, 0]))
    f = certify_event(spin4, spin_event(spin4, [0, Fraction(5, 13), Fraction(12, 13)]))
    check = spin_step_two_check(spin4, d, e, f)
    assert check.holds
    assert check.alpha == Fraction(1, 2)
    assert check.beta == Fraction(4, 5)


def test_idempotent_from_square(spin4):
    x = spin4.element([0, 2, 0, 0])
    event = idempotent_from_square(spin4, x)
    assert event.element == spin4.element([Fraction(1, 2), Fraction(1, 2), 0, 0])
    with pytest.raises(NotProportional):
        idempotent_from_square(spin4, spin4.element([1, 1, 0, 0]))


def test_golden_idempotent(h2_split_complex):
    alpha = find_golden_alpha(split_complex())
    assert alpha == split_complex().basis_by_label("j")
    f = certify_event(h2_split_complex, golden_idempotent(h2_split_complex, alpha))
    e = certify_event(h2_split_complex, matrix_unit_element(h2_split_complex, 0, 0))
    assert u_apply(e, f.element) == e.element * GOLDEN_LOW


def test_no_golden_alpha_in_division_rings():
    assert find_golden_alpha(octonions()) is None


@pytest.mark.parametrize(
    "build, size",
    [
        pytest.param(lambda: hermitian_matrix_algebra(reals(), 2), None, id="h2_reals"),
        pytest.param(lambda: hermitian_matrix_algebra(reals(), 3), None, id="h3_reals"),
        pytest.param(lambda: hermitian_matrix_algebra(complex_numbers(), 3), None, id="h3_complex"),
        pytest.param(
            lambda: hermitian_matrix_algebra(octonions(), 3), 9, id="h3_octonions", marks=pytest.mark.slow
        ),
    ]
    + [pytest.param(lambda d=d: spin_factor(d), None, id=f"spin{d}") for d in range(3, 7)],
)
def test_assumptions_hold_on_jb_algebras(build, size, seed):
    algebra = build()
    events = default_events(algebra, seed)[:size]
    report = check_assumptions(algebra, events, samples=3, seed=seed)
    assert report.conditions[UNIT_LAW].status == PASSED
    assert report.conditions[ORTHOGONALITY].status == PASSED
    assert report.passed, report.failed()


def spin_pool(d, seed):
    algebra = spin_factor(d)
    events = default_events(algebra, seed)
    return algebra, events + [ev.complement() for ev in events]


def test_spin_events_are_minimal_with_complementary_lambdas(seed):
    checked = 0
    for d in range(3, 9):
        algebra, pool = spin_pool(d, seed)
        assert all(projection_rank(ev) == 1 for ev in pool)
        for e, f in random_event_pairs(algebra, 34, seed + d, events=pool):
            lam, lam_prime = minimal_event_lambdas(algebra, e, f)
            assert lam + lam_prime == 1
            checked += 1
    assert checked >= 200


def test_spin_step_two_over_sampled_triples(seed):
    checked = 0
    for d in range(3, 9):
        algebra, pool = spin_pool(d, seed)
        picks = trial_rng(seed, d).integers(0, len(pool), size=(17, 3))
        for i, j, k in picks:
            check = spin_step_two_check(algebra, pool[int(i)], pool[int(j)], pool[int(k)])
            assert check.holds
            assert check.product == check.expected
            checked += 1
    assert checked >= 100


def test_golden_event_breaks_positive_projection(h2_split_complex, seed):
    events = default_events(h2_split_complex)
    assert any(ev.label.startswith("golden") for ev in events)
    report = check_assumptions(h2_split_complex, events, samples=2, seed=seed)
    assert report.conditions[POSITIVE_PROJECTION].status == FAILED
    assert POSITIVE_PROJECTION in report.failed()
