import pytest

from nonassoclab.certificates import (
    INVOLUTION_DEPENDENCY,
    candidate_screen,
    certificate_from_report,
    certificate_to_model,
    find_nilpotent_alpha,
    h4o_jordan_failure_witness,
    jordan_failure_search,
)
from nonassoclab.const import (
    ALTERNATIVITY,
    ASSOCIATIVITY,
    CONJUGATION,
    EXCLUDED,
    GOLDEN,
    JB_CONSISTENT,
    JORDAN_FAILURE,
    NOT_COVERED,
    SPIN_DENSE,
)
from nonassoclab.helper.exceptions import SearchBudgetExceeded
from nonassoclab.identities import jordan_defect
from nonassoclab.ring import (
    bioctonions,
    complex_numbers,
    octonions,
    quaternions,
    reals,
    sedenions,
    split_complex,
    split_octonions,
)


@pytest.mark.parametrize("ring", [reals, complex_numbers, quaternions])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_associative_rings_are_consistent(ring, n):
    assert candidate_screen(ring(), n).verdict == JB_CONSISTENT


@pytest.mark.parametrize("n", [1, 2, 3])
def test_octonions_up_to_three(n):
    assert candidate_screen(octonions(), n).verdict == JB_CONSISTENT


def test_octonions_excluded_from_four():
    report = candidate_screen(octonions(), 4)
    assert report.verdict == EXCLUDED
    (cert,) = report.certificates
    assert cert.kind == ASSOCIATIVITY
    assert cert.passed
    assert cert.verdict == "associator-nonzero"


def test_sedenions():
    report = candidate_screen(sedenions(), 2)
    assert report.verdict == SPIN_DENSE
    assert report.certificates[0].kind == CONJUGATION
    excluded = candidate_screen(sedenions(), 3)
    assert excluded.verdict == EXCLUDED
    assert excluded.certificates[0].kind == ALTERNATIVITY
    assert excluded.certificates[0].verdict == "constraint-violated"


def test_split_rings_excluded():
    report = candidate_screen(split_complex(), 2)
    assert report.verdict == EXCLUDED
    assert report.certificates[0].kind == GOLDEN
    assert report.certificates[0].passed
    assert candidate_screen(split_octonions(), 3).verdict == EXCLUDED


def test_split_complex_nilpotent_alpha():
    ring = split_complex()
    alpha = find_nilpotent_alpha(ring)
    assert alpha is not None
    assert (alpha * alpha.star()).is_zero()
    assert find_nilpotent_alpha(octonions()) is None


def test_bioctonions_depend_on_involution():
    both = candidate_screen(bioctonions("both"), 2)
    assert both.verdict == NOT_COVERED
    assert INVOLUTION_DEPENDENCY in both.flags
    right = candidate_screen(bioctonions("right"), 2)
    assert right.verdict == EXCLUDED
    assert right.certificates[0].kind == GOLDEN


def test_screen_rejects_empty_matrices():
    with pytest.raises(ValueError):
        candidate_screen(reals(), 0)


def test_jordan_failure_search_twisted(twisted, seed):
    cert = jordan_failure_search(twisted, seed=seed, budget=200)
    assert cert.kind == JORDAN_FAILURE
    assert cert.passed
    assert cert.seed == seed
    assert not jordan_defect(cert.objects["x"], cert.objects["y"]).is_zero()
    loaded = certificate_from_report(certificate_to_model(cert).model_dump(by_alias=True))
    loaded.replay()


def test_jordan_failure_search_budget(h3_reals, seed):
    with pytest.raises(SearchBudgetExceeded):
        jordan_failure_search(h3_reals, seed=seed, budget=5)


@pytest.mark.slow
def test_h4_octonions_jordan_failure(seed):
    cert = h4o_jordan_failure_witness(seed, budget=200)
    assert cert.n == 4
    assert cert.ring.name == "octonions"
    assert cert.verdict == "jordan-identity-fails"
    cert.replay()
