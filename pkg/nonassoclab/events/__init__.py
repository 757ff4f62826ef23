"""Quantum events: idempotents, projections U_e, conditioning and the assumptions checker."""
from .assumptions import (
    CONDITIONS,
    NORM,
    ORTHOGONALITY,
    POSITIVE_PROJECTION,
    STATE_INVARIANCE,
    UNIT_LAW,
    AssumptionsReport,
    ConditionResult,
    check_assumptions,
)
from .event import (
    Event,
    OrthogonalityReadings,
    certify_event,
    conditional_probability,
    evaluate_state,
    event_leq,
    orthogonal,
    orthogonal_sum,
    orthogonality_readings,
    u_apply,
)
from .families import (
    GOLDEN_HIGH,
    GOLDEN_LOW,
    default_events,
    find_golden_alpha,
    golden_alpha_candidates,
    golden_idempotent,
    spectral_events,
)
from .minimal import (
    StepTwoCheck,
    complement_part,
    idempotent_from_square,
    minimal_event_lambdas,
    projection_rank,
    proportionality,
    spin_step_two_check,
)

__all__ = [
    "CONDITIONS",
    "NORM",
    "ORTHOGONALITY",
    "POSITIVE_PROJECTION",
    "STATE_INVARIANCE",
    "UNIT_LAW",
    "AssumptionsReport",
    "ConditionResult",
    "Event",
    "GOLDEN_HIGH",
    "GOLDEN_LOW",
    "OrthogonalityReadings",
    "StepTwoCheck",
    "certify_event",
    "check_assumptions",
    "complement_part",
    "conditional_probability",
    "default_events",
    "evaluate_state",
    "event_leq",
    "find_golden_alpha",
    "golden_alpha_candidates",
    "golden_idempotent",
    "idempotent_from_square",
    "minimal_event_lambdas",
    "orthogonal",
    "orthogonal_sum",
    "orthogonality_readings",
    "projection_rank",
    "proportionality",
    "spectral_events",
    "spin_step_two_check",
    "u_apply",
]
