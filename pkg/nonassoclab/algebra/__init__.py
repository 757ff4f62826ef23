"""Commutative algebras: H_n(R), spin factors, symmetrised rings, tables."""
from __future__ import annotations

from typing import Any, Dict, Mapping

from nonassoclab.const import (
    CUSTOM,
    DIM,
    HERMITIAN,
    HERMITIAN_MATRIX,
    LABELS,
    MUL,
    NAME,
    RING,
    SPIN,
    SPIN_FACTOR,
    SYMMETRIZED,
    UNIT,
)
from nonassoclab.helper.exceptions import ConfigurationException, ParseError
from nonassoclab.ring import build_ring, ring_to_spec
from nonassoclab.scalar import format_scalar

from .basic import (
    CommAlgebra,
    Element,
    LinearOperator,
    jordan_mul,
    mult_operator,
    power,
    random_element,
    subalgebra_generated,
    triple_product,
)
from .custom import custom_algebra, custom_algebra_from_config, symmetrized_algebra
from .hermitian import (
    diagonal_element,
    element_to_matrix,
    hermitian_matrix_algebra,
    matrix_to_element,
    matrix_unit_element,
    rank_one_projection,
    trace_functional,
)
from .spin import rational_unit_vector, spin_element, spin_event, spin_factor
from .state import State, canonical_states, spin_state, states_supported_on, trace_state


def build_algebra(config: Mapping[str, Any], location: str = "algebra") -> CommAlgebra:
    """CommAlgebra from a validated algebra spec."""
    try:
        if HERMITIAN in config:
            spec = config[HERMITIAN]
            ring = build_ring(spec[RING], f"{location}.{HERMITIAN}.{RING}")
            return hermitian_matrix_algebra(ring, int(spec["n"]))
        if SPIN in config:
            return spin_factor(int(config[SPIN][DIM]))
        if SYMMETRIZED in config:
            return symmetrized_algebra(build_ring(config[SYMMETRIZED][RING], f"{location}.{SYMMETRIZED}"))
        if CUSTOM in config:
            return custom_algebra_from_config(config[CUSTOM], f"{location}.{CUSTOM}")
    except ParseError:
        raise
    except ConfigurationException as err:
        raise ParseError(str(err), location) from err
    raise ParseError("Algebra spec needs one of hermitian, spin, symmetrized, custom", location)


def algebra_to_spec(algebra: CommAlgebra) -> Dict[str, Any]:
    """Spec document that build_algebra turns back into the same algebra."""
    if algebra.provenance == HERMITIAN_MATRIX:
        return {HERMITIAN: {RING: ring_to_spec(algebra.info["ring"]), "n": algebra.info["n"]}}
    if algebra.provenance == SPIN_FACTOR:
        return {SPIN: {DIM: algebra.dim}}
    if algebra.info.get(SYMMETRIZED):
        return {SYMMETRIZED: {RING: ring_to_spec(algebra.info[RING])}}
    labels = list(algebra.labels)
    return {
        CUSTOM: {
            NAME: algebra.name,
            LABELS: labels,
            MUL: {
                f"{labels[i]}*{labels[j]}": {labels[k]: format_scalar(c) for k, c in terms}
                for (i, j), terms in sorted(algebra.table.items())
            },
            UNIT: {labels[k]: format_scalar(c) for k, c in enumerate(algebra.unit.coeffs) if c != 0},
        }
    }


__all__ = [
    "CommAlgebra",
    "Element",
    "LinearOperator",
    "State",
    "algebra_to_spec",
    "build_algebra",
    "canonical_states",
    "custom_algebra",
    "custom_algebra_from_config",
    "diagonal_element",
    "element_to_matrix",
    "hermitian_matrix_algebra",
    "jordan_mul",
    "matrix_to_element",
    "matrix_unit_element",
    "mult_operator",
    "power",
    "random_element",
    "rank_one_projection",
    "rational_unit_vector",
    "spin_element",
    "spin_event",
    "spin_factor",
    "spin_state",
    "states_supported_on",
    "subalgebra_generated",
    "symmetrized_algebra",
    "trace_functional",
    "trace_state",
    "triple_product",
]
