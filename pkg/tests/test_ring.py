from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nonassoclab.const import NEGATIVE_WITNESS, POSITIVE_DEFINITE
from nonassoclab.helper.exceptions import ConfigurationException, NotScalarForm, ParseError
from nonassoclab.ring import (
    alternativity_check,
    associativity_check,
    bioctonions,
    build_ring,
    complex_numbers,
    hermitian_scalar_check,
    involution_check,
    norm_definiteness_check,
    norm_form,
    octonions,
    quaternions,
    reals,
    ring_from_table,
    ring_to_spec,
    sedenions,
    split_complex,
    split_octonions,
)

small = st.fractions(min_value=-3, max_value=3, max_denominator=4)


def octonion_elements():
    return st.lists(small, min_size=8, max_size=8).map(octonions().element)


@pytest.mark.parametrize(
    "factory, dim",
    [(reals, 1), (complex_numbers, 2), (quaternions, 4), (octonions, 8), (sedenions, 16)],
)
def test_cayley_dickson_dimensions(factory, dim):
    ring = factory()
    assert ring.dim == dim
    assert involution_check(ring).holds


def test_quaternion_units_anticommute():
    ring = quaternions()
    i, j, k = (ring.basis_by_label(label) for label in ("i", "j", "k"))
    assert i * j == -(j * i)
    assert i * j in (k, -k)
    assert i * i == -ring.one()


def test_associativity_ladder():
    assert associativity_check(quaternions()).holds
    octo = associativity_check(octonions())
    assert not octo.holds
    a, b, c = octo.witness
    assert (a * b) * c - a * (b * c) == octo.residual
    assert alternativity_check(octonions()).holds


def test_sedenions_not_alternative():
    verdict = alternativity_check(sedenions())
    assert not verdict.holds
    alpha, beta = verdict.witness
    left = alpha * (alpha * beta) - (alpha * alpha) * beta
    right = (beta * alpha) * alpha - beta * (alpha * alpha)
    assert not (left.is_zero() and right.is_zero())


@settings(max_examples=40, deadline=None)
@given(octonion_elements(), octonion_elements())
def test_octonions_are_alternative_and_composition(a, b):
    assert a * (a * b) == (a * a) * b
    assert (b * a) * a == b * (a * a)
    assert (a * b).star() == b.star() * a.star()
    assert norm_form(octonions(), a * b).scalar_part() == (
        norm_form(octonions(), a).scalar_part() * norm_form(octonions(), b).scalar_part()
    )


def test_norm_definiteness():
    assert norm_definiteness_check(octonions()).status == POSITIVE_DEFINITE
    verdict = norm_definiteness_check(split_complex())
    assert verdict.status == NEGATIVE_WITNESS
    assert verdict.value < 0
    assert norm_definiteness_check(split_octonions()).signature == (4, 4, 0)


def test_hermitian_scalar_depends_on_involution():
    assert hermitian_scalar_check(octonions()).holds
    assert not hermitian_scalar_check(bioctonions("both")).holds
    assert not hermitian_scalar_check(bioctonions("right")).holds
    with pytest.raises(NotScalarForm):
        norm_definiteness_check(bioctonions("both"))


def test_tensor_conventions_are_recorded():
    ring = bioctonions("right")
    assert ring.dim == 16
    assert any("right" in c for c in ring.conventions)


def test_ring_table_round_trip():
    ring = quaternions()
    rebuilt = build_ring(ring_to_spec(ring))
    assert rebuilt.dim == ring.dim
    assert rebuilt.table == ring.table
    assert rebuilt.invol == ring.invol


def test_ring_from_table_fills_unit_products():
    ring = ring_from_table(
        {
            "labels": ["1", "j"],
            "mul": {"j*j": {"1": "1"}},
            "invol": {"j": {"j": "-1"}},
        }
    )
    j = ring.basis_by_label("j")
    assert ring.one() * j == j
    assert j * j == ring.one()
    assert j.star() == -j
    assert involution_check(ring).holds


def test_ring_table_errors():
    with pytest.raises(ParseError):
        ring_from_table({"labels": ["1", "j"], "mul": {"j*k": {"1": "1"}}})
    with pytest.raises(ParseError):
        ring_from_table({"labels": ["1", "j"], "mul": {"jj": {"1": "1"}}})
    with pytest.raises(ConfigurationException):
        build_ring("pentonions")


def test_build_ring_variants():
    assert build_ring("octonions").dim == 8
    assert build_ring({"named": "bioctonions", "involution": "right"}).name == "bioctonions[right]"
    doubled = build_ring({"cayley_dickson": {"base": "complex", "gammas": [1], "name": "split-q"}})
    assert doubled.dim == 4
    assert doubled.name == "split-q"
    assert doubled.gammas == (-1, 1)
    product = build_ring({"tensor": {"left": "complex", "right": "quaternions"}})
    assert product.dim == 8


def test_exact_scalars_in_ring():
    ring = complex_numbers()
    z = ring.element([Fraction(3, 5), Fraction(4, 5)])
    assert norm_form(ring, z) == ring.one()
