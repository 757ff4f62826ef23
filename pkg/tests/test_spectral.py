from fractions import Fraction

import numpy as np
import pytest

from nonassoclab.algebra import (
    build_algebra,
    element_to_matrix,
    hermitian_matrix_algebra,
    matrix_unit_element,
    random_element,
    trace_state,
)
from nonassoclab.const import NOT_POSITIVE, POSITIVE
from nonassoclab.helper.exceptions import (
    ComplexSpectrum,
    NonAssociativeGenerated,
    NormUnavailable,
    ReconstructionDefect,
)
from nonassoclab.helper.util import trial_rng
from nonassoclab.ring import reals, split_complex
from nonassoclab.scalar import QSqrt5
from nonassoclab.spectral import (
    is_positive,
    jb_norm_axioms,
    minimal_polynomial,
    moments_check,
    order_unit_norm,
    real_roots,
    spectral_resolution,
)

PHI = QSqrt5(Fraction(1, 2), Fraction(1, 2))


def test_minimal_polynomial_of_idempotent(h3_reals):
    e = matrix_unit_element(h3_reals, 0, 0)
    assert minimal_polynomial(h3_reals, e) == [0, -1, 1]


def test_golden_spectrum_is_exact(h2_reals):
    x = h2_reals.from_dict({"a11": 1, "a12": 1})
    resolution = spectral_resolution(h2_reals, x)
    assert resolution.exact
    assert resolution.eigenvalues == [PHI, 1 - PHI]
    assert resolution.reconstruct() == x
    assert order_unit_norm(h2_reals, x) == PHI


def test_irrational_spectrum_falls_back_to_floats(h2_reals):
    x = h2_reals.from_dict({"a11": 1, "a22": -1, "a12": 1})
    resolution = spectral_resolution(h2_reals, x)
    assert not resolution.exact
    assert [float(t) for t in resolution.eigenvalues] == pytest.approx([2 ** 0.5, -(2 ** 0.5)])


def test_spin_spectrum():
    spin5 = build_algebra({"spin": {"dim": 5}})
    x = spin5.element([Fraction(1, 2), Fraction(3, 5), Fraction(4, 5), 0, 0])
    resolution = spectral_resolution(spin5, x)
    assert resolution.eigenvalues == [Fraction(3, 2), Fraction(-1, 2)]
    for e in resolution.idempotents:
        assert e * e == e
    assert is_positive(spin5, x) == NOT_POSITIVE
    assert is_positive(spin5, x * x) == POSITIVE


def test_nilpotent_has_no_resolution(h2_split_complex):
    ring = split_complex()
    x = matrix_unit_element(h2_split_complex, 0, 1, ring.one() + ring.basis_by_label("j"))
    assert (x * x).is_zero()
    with pytest.raises(ReconstructionDefect):
        spectral_resolution(h2_split_complex, x)
    with pytest.raises(NormUnavailable):
        order_unit_norm(h2_split_complex, x)


def test_complex_spectrum(h2_split_complex):
    j = split_complex().basis_by_label("j")
    x = matrix_unit_element(h2_split_complex, 0, 1, j)
    with pytest.raises(ComplexSpectrum):
        spectral_resolution(h2_split_complex, x)


def test_non_associative_generated_subalgebra():
    twisted = build_algebra(
        {
            "custom": {
                "labels": ["1", "a", "b"],
                "unit": {"1": 1},
                "mul": {
                    "1*1": {"1": 1},
                    "1*a": {"a": 1},
                    "1*b": {"b": 1},
                    "a*a": {"b": 1},
                    "a*b": {"1": 1},
                    "b*b": {"b": 1},
                },
            }
        }
    )
    with pytest.raises(NonAssociativeGenerated):
        spectral_resolution(twisted, twisted.from_dict({"a": 1}))


def test_real_roots_mixed_factors():
    roots, exact = real_roots([Fraction(-1), Fraction(-1), Fraction(1)])
    assert exact
    assert roots == [1 - PHI, PHI]
    roots, exact = real_roots([Fraction(-2), 0, Fraction(1)])
    assert not exact
    with pytest.raises(ComplexSpectrum):
        real_roots([Fraction(1), 0, Fraction(1)])


def test_moments_against_trace_state(h3_reals):
    x = h3_reals.from_dict({"a11": 2, "a22": -1, "a12": 1, "a23": 1})
    mu = trace_state(h3_reals, matrix_unit_element(h3_reals, 0, 0))
    assert moments_check(h3_reals, x, mu, 4) == pytest.approx(0.0, abs=1e-8)


def test_norm_axioms(h2_reals):
    x = h2_reals.from_dict({"a11": 1, "a12": 1})
    y = h2_reals.from_dict({"a22": 2})
    check = jb_norm_axioms(h2_reals, x, y)
    assert check.holds
    assert check.norm_x2 == pytest.approx(check.norm_x ** 2)


def real_matrix(algebra, x):
    return np.array([[float(entry.coeffs[0]) for entry in row] for row in element_to_matrix(algebra, x)])


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_resolution_matches_symmetric_eigendecomposition(n, seed):
    algebra = hermitian_matrix_algebra(reals(), n)
    tracial = trace_state(algebra, algebra.unit)
    for t in range(25):
        x = random_element(algebra, trial_rng(seed + n, t), -3, 3)
        resolution = spectral_resolution(algebra, x)
        values, vectors = np.linalg.eigh(real_matrix(algebra, x))
        scale = max(1.0, float(np.abs(values).max()))
        eigenvalues = [float(value) for value in resolution.eigenvalues]
        for value in values:
            assert min(abs(value - other) for other in eigenvalues) <= 1e-9 * scale
        for value, e in zip(eigenvalues, resolution.idempotents):
            block = np.abs(values - value) <= 1e-6 * scale
            assert block.any()
            oracle = vectors[:, block] @ vectors[:, block].T
            assert np.abs(real_matrix(algebra, e) - oracle).max() <= 1e-8
        source = x if resolution.exact else x.to_float()
        assert (resolution.reconstruct() - source).max_abs() <= 1e-9 * scale
        assert moments_check(algebra, x, tracial, 6, resolution=resolution) <= 1e-12 * scale ** 6
