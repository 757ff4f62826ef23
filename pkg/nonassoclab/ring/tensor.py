"""Tensor products of *-rings: bioctonions, quateroctonions, octooctonions."""
from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List

from nonassoclab.const import BOTH, RIGHT
from nonassoclab.helper.exceptions import ConfigurationException
from nonassoclab.scalar import ZERO

from .basic import SparseTable, StarRing
from .cayley_dickson import complex_numbers, octonions, quaternions

_LOGGER = logging.getLogger(__name__)

INVOLUTIONS = (BOTH, RIGHT)


def tensor_product(left: StarRing, right: StarRing, involution: str = BOTH, name: str = "") -> StarRing:
    """R (x) S with basis e_i (x) f_j at index i * dim(S) + j.

    `both`:  (a (x) b)* = a* (x) b*
    `right`: (a (x) b)* = a (x) b*, an anti-automorphism only for commutative R.
    """
    if involution not in INVOLUTIONS:
        raise ConfigurationException(
            f"Unknown tensor involution {involution!r}, use one of {INVOLUTIONS}"
        )
    m, n = left.dim, right.dim
    dim = m * n
    table: SparseTable = {}
    for (i, k), left_terms in left.table.items():
        for (j, l), right_terms in right.table.items():
            terms: Dict[int, Fraction] = {}
            for p, a in left_terms:
                for q, b in right_terms:
                    idx = p * n + q
                    terms[idx] = terms.get(idx, ZERO) + a * b
            packed = tuple((idx, c) for idx, c in sorted(terms.items()) if c != 0)
            if packed:
                table[(i * n + j, k * n + l)] = packed

    invol: List[List[Fraction]] = [[ZERO] * dim for _ in range(dim)]
    for i in range(m):
        for j in range(n):
            for p in range(m):
                a = left.invol[p][i] if involution == BOTH else (Fraction(1) if p == i else ZERO)
                if a == 0:
                    continue
                for q in range(n):
                    b = right.invol[q][j]
                    if b != 0:
                        invol[p * n + q][i * n + j] = a * b
    labels = tuple(
        f"{la}(x){lb}" for la in left.labels for lb in right.labels
    )
    convention = f"tensor involution '{involution}' (convention, not mandated)"
    label = name or f"{left.name}(x){right.name}"
    _LOGGER.debug("Built %s of dimension %d with %s", label, dim, convention)
    return StarRing(
        name=label,
        dim=dim,
        table=table,
        invol=invol,
        unit=left.unit * n + right.unit,
        labels=labels,
        conventions=left.conventions + right.conventions + (convention,),
    )


@lru_cache(maxsize=None)
def bioctonions(involution: str = BOTH) -> StarRing:
    return tensor_product(complex_numbers(), octonions(), involution, f"bioctonions[{involution}]")


@lru_cache(maxsize=None)
def quateroctonions(involution: str = BOTH) -> StarRing:
    return tensor_product(quaternions(), octonions(), involution, f"quateroctonions[{involution}]")


@lru_cache(maxsize=None)
def octooctonions(involution: str = BOTH) -> StarRing:
    return tensor_product(octonions(), octonions(), involution, f"octooctonions[{involution}]")


TENSOR_RINGS: Dict[str, Callable[[str], StarRing]] = {
    "bioctonions": bioctonions,
    "quateroctonions": quateroctonions,
    "octooctonions": octooctonions,
}
