from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nonassoclab.algebra import (
    algebra_to_spec,
    build_algebra,
    canonical_states,
    custom_algebra,
    diagonal_element,
    element_to_matrix,
    hermitian_matrix_algebra,
    matrix_unit_element,
    power,
    random_element,
    rank_one_projection,
    rational_unit_vector,
    spin_event,
    spin_factor,
    subalgebra_generated,
    symmetrized_algebra,
    trace_state,
    triple_product,
)
from nonassoclab.helper.exceptions import ConfigurationException, DimensionMismatch, ParseError
from nonassoclab.ring import complex_numbers, octonions, quaternions, reals

coefficients = st.integers(min_value=-3, max_value=3).map(Fraction)


@pytest.mark.parametrize(
    "ring, n, dim",
    [(reals, 3, 6), (complex_numbers, 3, 9), (quaternions, 2, 6), (octonions, 3, 27), (octonions, 1, 1)],
)
def test_hermitian_dimensions(ring, n, dim):
    algebra = hermitian_matrix_algebra(ring(), n)
    assert algebra.dim == dim
    algebra.validate()


def test_hermitian_labels(h2_reals, h2_quaternions):
    assert h2_reals.labels == ("a11", "a22", "a12")
    assert "a12[k]" in h2_quaternions.labels


def test_matrix_units_are_idempotent(h3_complex):
    for i in range(3):
        e = matrix_unit_element(h3_complex, i, i)
        assert e * e == e
    total = diagonal_element(h3_complex, [1, 1, 1])
    assert total == h3_complex.unit


def test_off_diagonal_square(h3_complex):
    ring = complex_numbers()
    i = ring.basis_by_label("i")
    x = matrix_unit_element(h3_complex, 0, 1, i)
    assert x * x == diagonal_element(h3_complex, [1, 1, 0])
    matrix = element_to_matrix(h3_complex, x)
    assert matrix[0][1] == i
    assert matrix[1][0] == -i


def test_rank_one_projection(h3_octonions):
    ring = octonions()
    beta = ring.basis(3) * Fraction(1, 2)
    p = rank_one_projection(h3_octonions, 0, 2, beta)
    assert p is not None
    assert p * p == p


@settings(max_examples=25, deadline=None)
@given(st.lists(coefficients, min_size=6, max_size=6), st.lists(coefficients, min_size=6, max_size=6))
def test_jordan_identity_in_real_symmetric_matrices(h3_reals, xs, ys):
    x, y = h3_reals.element(xs), h3_reals.element(ys)
    x2 = x * x
    assert x2 * (x * y) == x * (x2 * y)


def test_power_associativity_in_spin(spin4):
    rng = np.random.default_rng(7)
    x = random_element(spin4, rng)
    assert power(spin4, x, 4) == power(spin4, x, 2) * power(spin4, x, 2)


def test_triple_product_with_unit(h3_reals):
    x = h3_reals.basis(4)
    assert triple_product(h3_reals, x, h3_reals.unit, x) == x * x


def test_spin_factor_events(spin4):
    u = rational_unit_vector([Fraction(1, 2), Fraction(-1, 3)])
    assert sum(c * c for c in u) == 1
    e = spin_event(spin4, u)
    assert e * e == e
    with pytest.raises(ConfigurationException):
        spin_factor(1)


def test_subalgebra_generated_by_idempotent(h3_reals):
    e = matrix_unit_element(h3_reals, 0, 0)
    assert len(subalgebra_generated(h3_reals, [e])) == 2


def test_states(h3_complex, spin4):
    for state in canonical_states(h3_complex):
        assert state.normalized
    for state in canonical_states(spin4):
        assert state.normalized
    e = matrix_unit_element(h3_complex, 1, 1)
    mu = trace_state(h3_complex, e)
    assert mu(e) == 1
    assert mu(matrix_unit_element(h3_complex, 0, 0)) == 0


def test_symmetrized_quaternions():
    algebra = symmetrized_algebra(quaternions())
    i = algebra.basis(1)
    j = algebra.basis(2)
    assert (i * j).is_zero()
    assert i * i == -algebra.unit


def test_custom_algebra_requires_unit():
    with pytest.raises(ConfigurationException):
        custom_algebra("broken", ["1", "a"], {(1, 1): {0: Fraction(1)}}, [Fraction(1), Fraction(0)])
    algebra = custom_algebra(
        "dual",
        ["1", "a"],
        {(0, 0): {0: Fraction(1)}, (0, 1): {1: Fraction(1)}},
        [Fraction(1), Fraction(0)],
    )
    a = algebra.basis(1)
    assert (a * a).is_zero()


def test_build_algebra_round_trip(h2_quaternions, spin4):
    for algebra in (h2_quaternions, spin4, symmetrized_algebra(complex_numbers())):
        rebuilt = build_algebra(algebra_to_spec(algebra))
        assert rebuilt.dim == algebra.dim
        assert rebuilt.table == algebra.table


def test_build_algebra_errors():
    with pytest.raises(ParseError):
        build_algebra({"hermitian": {"ring": "reals", "n": 0}})
    with pytest.raises(ParseError):
        build_algebra({"custom": {"labels": ["1", "a"], "mul": {"1*b": {"a": "1"}}, "unit": {"1": "1"}}})
    with pytest.raises(ParseError):
        build_algebra({})


def test_mixed_algebras_do_not_combine(h2_reals, h3_reals):
    with pytest.raises(DimensionMismatch):
        h2_reals.unit * h3_reals.unit
