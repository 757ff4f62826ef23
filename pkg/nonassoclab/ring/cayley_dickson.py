"""Cayley-Dickson doubling and the named rings built from it.

Convention: (a, b)(c, d) = (ac + gamma d*b, da + bc*), (a, b)* = (a*, -b),
unit (1, 0). gamma = -1 gives the division tower, gamma = +1 split algebras.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Sequence, Tuple

from nonassoclab.helper.exceptions import ConfigurationException
from nonassoclab.scalar import ONE, ZERO

from .basic import SparseTable, StarRing

_LOGGER = logging.getLogger(__name__)

SMALL_LABELS = {
    1: ("1",),
    2: ("1", "i"),
    4: ("1", "i", "j", "k"),
}


def _basis(dim: int, index: int) -> List[Fraction]:
    coeffs = [ZERO] * dim
    coeffs[index] = ONE
    return coeffs


def _terms(coeffs: Sequence[Fraction], offset: int = 0) -> Tuple[Tuple[int, Fraction], ...]:
    return tuple((k + offset, c) for k, c in enumerate(coeffs) if c != 0)


def cayley_dickson_double(
    ring: StarRing, gamma: int, name: str = "", labels: Sequence[str] = ()
) -> StarRing:
    """Double `ring` with sign gamma; the result has dimension 2 * ring.dim."""
    if gamma not in (1, -1):
        raise ConfigurationException(f"gamma must be +1 or -1, got {gamma}")
    n = ring.dim
    basis = [_basis(n, i) for i in range(n)]
    stars = [ring.star_coeffs(b) for b in basis]
    table: SparseTable = {}

    def put(i: int, j: int, terms: Tuple[Tuple[int, Fraction], ...]) -> None:
        if terms:
            table[(i, j)] = terms

    for i in range(n):
        for j in range(n):
            # (e_i, 0)(e_j, 0) = (e_i e_j, 0)
            put(i, j, _terms(ring.mul_coeffs(basis[i], basis[j])))
            # (e_i, 0)(0, e_j) = (0, e_j e_i)
            put(i, n + j, _terms(ring.mul_coeffs(basis[j], basis[i]), n))
            # (0, e_i)(e_j, 0) = (0, e_i e_j*)
            put(n + i, j, _terms(ring.mul_coeffs(basis[i], stars[j]), n))
            # (0, e_i)(0, e_j) = (gamma e_j* e_i, 0)
            product = ring.mul_coeffs(stars[j], basis[i])
            put(n + i, n + j, _terms([gamma * c for c in product]))

    dim = 2 * n
    invol = [[ZERO] * dim for _ in range(dim)]
    for i in range(n):
        for k in range(n):
            invol[i][k] = ring.invol[i][k]
        invol[n + i][n + i] = -ONE
    gammas = ring.gammas + (gamma,)
    label = name or f"CD({ring.name}, {gamma:+d})"
    _LOGGER.debug("Doubled %s with gamma %+d to dimension %d", ring.name, gamma, dim)
    return StarRing(
        name=label,
        dim=dim,
        table=table,
        invol=invol,
        unit=ring.unit,
        labels=tuple(labels)
        or SMALL_LABELS.get(dim, ("1",) + tuple(f"e{i}" for i in range(1, dim))),
        conventions=ring.conventions,
        gammas=gammas,
    )


def cayley_dickson_tower(
    gammas: Sequence[int], name: str = "", labels: Sequence[str] = ()
) -> StarRing:
    """Double the reals once per entry of `gammas`."""
    ring = reals()
    for step, gamma in enumerate(gammas):
        last = step == len(gammas) - 1
        ring = cayley_dickson_double(
            ring, gamma, name if last else "", labels if last else ()
        )
    return ring


@lru_cache(maxsize=None)
def reals() -> StarRing:
    return StarRing(
        name="reals",
        dim=1,
        table={(0, 0): ((0, ONE),)},
        invol=[[ONE]],
        labels=("1",),
    )


@lru_cache(maxsize=None)
def complex_numbers() -> StarRing:
    return cayley_dickson_tower((-1,), "complex")


@lru_cache(maxsize=None)
def quaternions() -> StarRing:
    return cayley_dickson_tower((-1, -1), "quaternions")


@lru_cache(maxsize=None)
def octonions() -> StarRing:
    return cayley_dickson_tower((-1, -1, -1), "octonions")


@lru_cache(maxsize=None)
def sedenions() -> StarRing:
    return cayley_dickson_tower((-1, -1, -1, -1), "sedenions")


@lru_cache(maxsize=None)
def trigintaduonions() -> StarRing:
    return cayley_dickson_tower((-1, -1, -1, -1, -1), "trigintaduonions")


@lru_cache(maxsize=None)
def split_complex() -> StarRing:
    return cayley_dickson_tower((1,), "split-complex", ("1", "j"))


@lru_cache(maxsize=None)
def split_quaternions() -> StarRing:
    return cayley_dickson_tower((-1, 1), "split-quaternions")


@lru_cache(maxsize=None)
def split_octonions() -> StarRing:
    return cayley_dickson_tower((-1, -1, 1), "split-octonions")


CAYLEY_DICKSON_RINGS: Dict[str, Callable[[], StarRing]] = {
    "reals": reals,
    "complex": complex_numbers,
    "quaternions": quaternions,
    "octonions": octonions,
    "sedenions": sedenions,
    "trigintaduonions": trigintaduonions,
    "split-complex": split_complex,
    "split-quaternions": split_quaternions,
    "split-octonions": split_octonions,
}
