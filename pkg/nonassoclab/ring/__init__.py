"""*-rings: Cayley-Dickson doubling, tensor products and explicit tables."""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, List, Mapping

from nonassoclab.const import (
    BASE,
    BOTH,
    CAYLEY_DICKSON,
    GAMMAS,
    INVOL,
    INVOLUTION,
    LABELS,
    LEFT,
    MUL,
    NAME,
    NAMED,
    RIGHT,
    TABLE,
    TENSOR,
    UNIT,
)
from nonassoclab.helper.exceptions import ConfigurationException, ParseError
from nonassoclab.scalar import ONE, ZERO, format_rational, parse_rational

from .basic import RingElement, SparseTable, StarRing, sparse_product
from .cayley_dickson import (
    CAYLEY_DICKSON_RINGS,
    cayley_dickson_double,
    cayley_dickson_tower,
    complex_numbers,
    octonions,
    quaternions,
    reals,
    sedenions,
    split_complex,
    split_octonions,
    split_quaternions,
    trigintaduonions,
)
from .checks import (
    NormDefiniteness,
    RingVerdict,
    alternativity_check,
    associativity_check,
    hermitian_scalar_check,
    involution_check,
    norm_definiteness_check,
    norm_form,
    ring_mul,
    self_adjoint_basis,
    star,
)
from .tensor import TENSOR_RINGS, bioctonions, octooctonions, quateroctonions, tensor_product


def named_ring(name: str, involution: str = BOTH) -> StarRing:
    if name in CAYLEY_DICKSON_RINGS:
        return CAYLEY_DICKSON_RINGS[name]()
    if name in TENSOR_RINGS:
        return TENSOR_RINGS[name](involution)
    raise ConfigurationException(
        f"Unknown ring {name!r}. Known: {', '.join(sorted(CAYLEY_DICKSON_RINGS) + sorted(TENSOR_RINGS))}"
    )


def _split_key(key: str, location: str) -> List[str]:
    parts = [p.strip() for p in str(key).split("*")]
    if len(parts) != 2 or not all(parts):
        raise ParseError(f"Product key {key!r} must look like 'x*y'", location)
    return parts


def _index(labels: List[str], label: str, location: str) -> int:
    try:
        return labels.index(str(label))
    except ValueError as err:
        raise ParseError(f"Unknown basis label {label!r}", location) from err


def ring_from_table(config: Mapping[str, Any], location: str = "ring.table") -> StarRing:
    """StarRing from explicit labels, products and involution images.

    Products with the unit are filled in when omitted; basis elements missing
    from `invol` are fixed.
    """
    labels = [str(label) for label in config[LABELS]]
    dim = len(labels)
    unit = _index(labels, config.get(UNIT, labels[0]), f"{location}.unit")
    dense: Dict[tuple, Dict[int, Fraction]] = {}
    for i in range(dim):
        dense[(unit, i)] = {i: ONE}
        dense[(i, unit)] = {i: ONE}
    for key, image in (config.get(MUL) or {}).items():
        where = f"{location}.mul[{key}]"
        a, b = (_index(labels, p, where) for p in _split_key(key, where))
        dense[(a, b)] = {
            _index(labels, k, where): parse_rational(v, f"{where}.{k}")
            for k, v in (image or {}).items()
        }
    table: SparseTable = {
        key: tuple((k, c) for k, c in sorted(terms.items()) if c != 0)
        for key, terms in dense.items()
        if any(c != 0 for c in terms.values())
    }
    invol = [[ONE if i == j else ZERO for j in range(dim)] for i in range(dim)]
    for key, image in (config.get(INVOL) or {}).items():
        where = f"{location}.invol[{key}]"
        j = _index(labels, key, where)
        for i in range(dim):
            invol[i][j] = ZERO
        for k, v in (image or {}).items():
            invol[_index(labels, k, where)][j] = parse_rational(v, f"{where}.{k}")
    return StarRing(
        name=str(config.get(NAME, "custom-ring")),
        dim=dim,
        table=table,
        invol=invol,
        unit=unit,
        labels=labels,
        conventions=("explicit table",),
    )


def ring_to_spec(ring: StarRing) -> Dict[str, Any]:
    """Explicit table spec that ring_from_table rebuilds into the same ring."""
    labels = list(ring.labels)
    mul = {
        f"{labels[i]}*{labels[j]}": {labels[k]: format_rational(c) for k, c in terms}
        for (i, j), terms in sorted(ring.table.items())
    }
    invol = {}
    for j in range(ring.dim):
        column = {labels[i]: format_rational(ring.invol[i][j]) for i in range(ring.dim) if ring.invol[i][j] != 0}
        if column != {labels[j]: "1"}:
            invol[labels[j]] = column
    return {
        TABLE: {
            NAME: ring.name,
            LABELS: labels,
            UNIT: labels[ring.unit],
            MUL: mul,
            INVOL: invol,
        }
    }


def build_ring(config: Any, location: str = "ring") -> StarRing:
    """StarRing from a validated ring spec (name, or one-key mapping)."""
    if isinstance(config, str):
        return named_ring(config)
    if NAMED in config:
        return named_ring(config[NAMED], config.get(INVOLUTION, BOTH))
    if CAYLEY_DICKSON in config:
        cd = config[CAYLEY_DICKSON]
        ring = build_ring(cd.get(BASE, "reals"), f"{location}.{CAYLEY_DICKSON}.{BASE}")
        gammas = list(cd.get(GAMMAS, []))
        for step, gamma in enumerate(gammas):
            last = step == len(gammas) - 1
            ring = cayley_dickson_double(ring, int(gamma), cd.get(NAME, "") if last else "")
        return ring
    if TENSOR in config:
        tensor = config[TENSOR]
        return tensor_product(
            build_ring(tensor[LEFT], f"{location}.{TENSOR}.{LEFT}"),
            build_ring(tensor[RIGHT], f"{location}.{TENSOR}.{RIGHT}"),
            tensor.get(INVOLUTION, BOTH),
            tensor.get(NAME, ""),
        )
    if TABLE in config:
        return ring_from_table(config[TABLE], f"{location}.{TABLE}")
    raise ParseError("Ring spec needs one of named, cayley_dickson, tensor, table", location)


__all__ = [
    "RingElement",
    "StarRing",
    "SparseTable",
    "sparse_product",
    "NormDefiniteness",
    "RingVerdict",
    "alternativity_check",
    "associativity_check",
    "hermitian_scalar_check",
    "involution_check",
    "norm_definiteness_check",
    "norm_form",
    "ring_mul",
    "self_adjoint_basis",
    "star",
    "cayley_dickson_double",
    "cayley_dickson_tower",
    "tensor_product",
    "named_ring",
    "build_ring",
    "ring_from_table",
    "ring_to_spec",
    "reals",
    "complex_numbers",
    "quaternions",
    "octonions",
    "sedenions",
    "trigintaduonions",
    "split_complex",
    "split_quaternions",
    "split_octonions",
    "bioctonions",
    "quateroctonions",
    "octooctonions",
    "CAYLEY_DICKSON_RINGS",
    "TENSOR_RINGS",
]
