from typing_extensions import Literal

NONASSOCLAB = "nonassoclab"
SCHEMA_VERSION = 1

# RUN DEFAULTS
DEFAULT_SEED = 20080513
DEFAULT_TOL = 1e-9
DEFAULT_TRIALS = 50
DEFAULT_SAMPLES = 12
SEED_ENV = "NONASSOC_LAB_SEED"
MERGE_ROOT_TOL = 1e-7

# SCALAR FIELDS
RATIONAL = "rational"
QSQRT5 = "qsqrt5"
FLOAT = "float"
ScalarField = Literal["rational", "qsqrt5", "float"]

# PROVENANCE
HERMITIAN_MATRIX = "hermitian_matrix"
SPIN_FACTOR = "spin_factor"
CUSTOM = "custom"

# SPEC FILE KEYS
ALGEBRA = "algebra"
RING = "ring"
HERMITIAN = "hermitian"
SPIN = "spin"
SYMMETRIZED = "symmetrized"
CAYLEY_DICKSON = "cayley_dickson"
NAMED = "named"
TABLE = "table"
TENSOR = "tensor"
BASE = "base"
GAMMAS = "gammas"
EVENTS = "events"
STATES = "states"
PAIR = "pair"
ELEMENT = "element"
LOGGER = "logger"
DIM = "dim"
UNIT = "unit"
LABELS = "labels"
MUL = "mul"
INVOL = "invol"
NAME = "name"
FIELD = "field"
INVOLUTION = "involution"
LEFT = "left"
RIGHT = "right"
BOTH = "both"

# VERDICT STATUSES
HOLDS_CERTIFIED = "holds-certified"
HOLDS_SAMPLED = "holds-sampled"
FAILS = "fails"
VerdictStatus = Literal["holds-certified", "holds-sampled", "fails"]

# NORM FORM SIGNATURES
POSITIVE_DEFINITE = "positive-definite"
ZERO_WITNESS = "zero-witness"
NEGATIVE_WITNESS = "negative-witness"

# POSITIVITY
POSITIVE = "positive"
NOT_POSITIVE = "not-positive"
UNKNOWN = "unknown"

# ASSUMPTIONS CONDITIONS
PASSED = "passed"
FAILED = "failed"
SKIPPED = "skipped"
VERIFIED_AGAINST_DISCOVERED = "verified against discovered sub-events"

# COMPATIBILITY LEVELS
INCOMPATIBLE = "incompatible"
WEAK_ASYMMETRIC = "weak-asymmetric"
SYMMETRIC = "symmetric"
OPERATOR = "operator"
BOOLEAN = "boolean"
COMPAT_GROUPS = ((1, 2), (3, 4, 5, 6), (7, 8), (9, 10, 11))

# SCREENING VERDICTS
JB_CONSISTENT = "JB-consistent"
SPIN_DENSE = "spin-dense"
EXCLUDED = "excluded"
NOT_COVERED = "not-covered"

# CERTIFICATE KINDS
GOLDEN = "golden"
NILPOTENT = "nilpotent"
ALTERNATIVITY = "alternativity"
ASSOCIATIVITY = "associativity"
CONJUGATION = "conjugation"
SCREEN = "screen"
JORDAN_FAILURE = "jordan-failure"

# CLI COMMANDS
ACTION = "action"
BUILD = "build"
IDENTITIES = "identities"
CHECK_ASSUMPTIONS = "check-assumptions"
COMPAT = "compat"
SPECTRAL = "spectral"
CERTIFY = "certify"
REPLAY = "replay"
JSON = "json"
TEXT = "text"

# EXIT CODES
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
