"""Replayable certificates for the H_n(R) exclusions and the candidate screen."""
from .builders import (
    alternativity_derivation_certificate,
    associativity_derivation_certificate,
    compress,
    conjugation_certificate,
    golden_idempotent_certificate,
    imaginary_units,
    nilpotent_violation_certificate,
)
from .certificate import (
    ASSERTIONS,
    NEGATIVE,
    NONZERO_RESIDUAL,
    ZERO_RESIDUAL,
    Certificate,
    CertificateContext,
    Check,
    assertion,
    evaluate_assertion,
)
from .screen import (
    INVOLUTION_DEPENDENCY,
    ScreenReport,
    candidate_screen,
    find_alternativity_pair,
    find_nilpotent_alpha,
    h4o_jordan_failure_witness,
    jordan_failure_search,
)
from .serialize import (
    certificate_from_model,
    certificate_from_report,
    certificate_to_model,
    coefficients,
    element_from_coefficients,
    parse_value,
    plain,
    ring_element_from_coefficients,
)

__all__ = [
    "ASSERTIONS",
    "NEGATIVE",
    "NONZERO_RESIDUAL",
    "ZERO_RESIDUAL",
    "INVOLUTION_DEPENDENCY",
    "Certificate",
    "CertificateContext",
    "Check",
    "ScreenReport",
    "alternativity_derivation_certificate",
    "assertion",
    "associativity_derivation_certificate",
    "candidate_screen",
    "certificate_from_model",
    "certificate_from_report",
    "certificate_to_model",
    "coefficients",
    "compress",
    "conjugation_certificate",
    "element_from_coefficients",
    "evaluate_assertion",
    "find_alternativity_pair",
    "find_nilpotent_alpha",
    "golden_idempotent_certificate",
    "h4o_jordan_failure_witness",
    "imaginary_units",
    "jordan_failure_search",
    "nilpotent_violation_certificate",
    "parse_value",
    "plain",
    "ring_element_from_coefficients",
]
