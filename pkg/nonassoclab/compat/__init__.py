"""Compatibility of event pairs: eleven conditions, four levels, the chain audit."""
from .batch import CompatBatch, compat_batch, random_event_pairs
from .checks import (
    BridgeVerdict,
    associativity_boolean_bridge,
    boolean_decomposition,
    complement_projection_defect,
    orthogonal_commutation_defect,
    square_positivity_check,
)
from .profile import CompatProfile, chain_violations, classify_level, compat_profile

__all__ = [
    "BridgeVerdict",
    "CompatBatch",
    "CompatProfile",
    "associativity_boolean_bridge",
    "boolean_decomposition",
    "chain_violations",
    "classify_level",
    "compat_batch",
    "compat_profile",
    "complement_projection_defect",
    "orthogonal_commutation_defect",
    "random_event_pairs",
    "square_positivity_check",
]
