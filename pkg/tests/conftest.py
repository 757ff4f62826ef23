"""Shared algebras for the test suite."""
import pytest

from nonassoclab.algebra import build_algebra, hermitian_matrix_algebra, spin_factor
from nonassoclab.ring import complex_numbers, octonions, quaternions, reals, split_complex

SEED = 20080513


@pytest.fixture(scope="session")
def h2_reals():
    return hermitian_matrix_algebra(reals(), 2)


@pytest.fixture(scope="session")
def h3_reals():
    return hermitian_matrix_algebra(reals(), 3)


@pytest.fixture(scope="session")
def h4_reals():
    return hermitian_matrix_algebra(reals(), 4)


@pytest.fixture(scope="session")
def h3_complex():
    return hermitian_matrix_algebra(complex_numbers(), 3)


@pytest.fixture(scope="session")
def h2_quaternions():
    return hermitian_matrix_algebra(quaternions(), 2)


@pytest.fixture(scope="session")
def h3_octonions():
    return hermitian_matrix_algebra(octonions(), 3)


@pytest.fixture(scope="session")
def h2_split_complex():
    return hermitian_matrix_algebra(split_complex(), 2)


@pytest.fixture(scope="session")
def spin4():
    return spin_factor(4)


@pytest.fixture
def seed():
    return SEED


@pytest.fixture(scope="session")
def twisted():
    """Commutative unital algebra with a^2 = b, a b = 1, b^2 = b; not power associative."""
    return build_algebra(
        {
            "custom": {
                "name": "twisted",
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
