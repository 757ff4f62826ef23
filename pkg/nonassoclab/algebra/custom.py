"""Algebras from explicit tables and the symmetrisation of a *-ring."""
from __future__ import annotations

import logging
from typing import Any, Dict, List, Mapping, Sequence, Tuple

from nonassoclab.const import CUSTOM, LABELS, MUL, NAME, UNIT
from nonassoclab.helper.exceptions import ConfigurationException, ParseError
from nonassoclab.ring import StarRing
from nonassoclab.ring.basic import SparseTable
from nonassoclab.scalar import HALF, ONE, ZERO, Scalar, parse_scalar

from .basic import CommAlgebra

_LOGGER = logging.getLogger(__name__)


def custom_algebra(
    name: str,
    labels: Sequence[str],
    products: Mapping[Tuple[int, int], Mapping[int, Scalar]],
    unit: Sequence[Scalar],
) -> CommAlgebra:
    """Commutative algebra from products of basis pairs.

    Each unordered pair may be given once; a conflicting mirror raises.
    """
    dim = len(labels)
    table: SparseTable = {}
    for (i, j), image in products.items():
        key = (i, j) if i <= j else (j, i)
        terms = tuple((k, c) for k, c in sorted(image.items()) if c != 0)
        if key in table and table[key] != terms:
            raise ConfigurationException(
                f"{name}: {labels[i]}*{labels[j]} and {labels[j]}*{labels[i]} differ"
            )
        if terms:
            table[key] = terms
    algebra = CommAlgebra(name, dim, table, unit, labels, CUSTOM)
    algebra.validate()
    return algebra


def custom_algebra_from_config(config: Mapping[str, Any], location: str = "algebra.custom") -> CommAlgebra:
    labels = [str(label) for label in config[LABELS]]

    def index(label: Any, where: str) -> int:
        try:
            return labels.index(str(label))
        except ValueError as err:
            raise ParseError(f"Unknown basis label {label!r}", where) from err

    products: Dict[Tuple[int, int], Dict[int, Scalar]] = {}
    for key, image in (config.get(MUL) or {}).items():
        where = f"{location}.mul[{key}]"
        parts = [p.strip() for p in str(key).split("*")]
        if len(parts) != 2:
            raise ParseError(f"Product key {key!r} must look like 'x*y'", where)
        i, j = index(parts[0], where), index(parts[1], where)
        image_coeffs = {
            index(k, where): parse_scalar(v, f"{where}.{k}") for k, v in (image or {}).items()
        }
        if (i, j) in products or (j, i) in products:
            previous = products.get((i, j), products.get((j, i)))
            if previous != image_coeffs:
                raise ParseError(f"Conflicting products for {key!r}", where)
        products[(i, j)] = image_coeffs
    unit: List[Scalar] = [ZERO] * len(labels)
    for label, value in (config.get(UNIT) or {}).items():
        unit[index(label, f"{location}.unit")] = parse_scalar(value, f"{location}.unit.{label}")
    try:
        return custom_algebra(str(config.get(NAME, "custom")), labels, products, unit)
    except ConfigurationException as err:
        raise ParseError(str(err), location) from err


def symmetrized_algebra(ring: StarRing) -> CommAlgebra:
    """The ring itself with x o y = (xy + yx)/2."""
    dim = ring.dim
    table: SparseTable = {}
    for i in range(dim):
        for j in range(i, dim):
            acc: Dict[int, Scalar] = {}
            for k, c in ring.table.get((i, j), ()) + ring.table.get((j, i), ()):
                acc[k] = acc.get(k, ZERO) + c * HALF
            terms = tuple((k, c) for k, c in sorted(acc.items()) if c != 0)
            if terms:
                table[(i, j)] = terms
    unit = [ONE if k == ring.unit else ZERO for k in range(dim)]
    return CommAlgebra(
        name=f"sym({ring.name})",
        dim=dim,
        table=table,
        unit=unit,
        labels=list(ring.labels),
        provenance=CUSTOM,
        info={"ring": ring, "symmetrized": True},
    )
