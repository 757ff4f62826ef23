"""Spectral resolutions, order-unit norm and positivity."""
from .norm import JBNormCheck, is_positive, jb_norm_axioms, moments_check, order_unit_norm
from .polynomial import evaluate, merge_roots, minimal_polynomial, real_roots
from .resolution import SpectralResolution, spectral_resolution, verify_resolution

__all__ = [
    "JBNormCheck",
    "SpectralResolution",
    "evaluate",
    "is_positive",
    "jb_norm_axioms",
    "merge_roots",
    "minimal_polynomial",
    "moments_check",
    "order_unit_norm",
    "real_roots",
    "spectral_resolution",
    "verify_resolution",
]
