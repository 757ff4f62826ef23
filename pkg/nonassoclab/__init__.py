"""Computational laboratory for nonassociative order-unit algebras."""

from .version import __version__ as version

name = "nonassoclab"


__all__ = [
    "name",
    "version",
]
