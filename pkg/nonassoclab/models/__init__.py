"""Report models. Every report carries "schema": 1 and dumps deterministically."""
from __future__ import annotations

from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field
from typing_extensions import Literal

from nonassoclab.const import SCHEMA_VERSION

ScalarValue = Union[List[str], str, float]
Coefficients = Dict[str, ScalarValue]


class Report(BaseModel):
    """Header shared by all reports."""
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    report: str
    seed: Optional[int] = None


class ObjectValue(BaseModel):
    """Element of the ring or of the algebra, by basis label."""
    space: Literal["ring", "algebra"]
    coeffs: Coefficients


class ResidualValue(BaseModel):
    type: Literal["ring", "algebra", "scalar", "none"]
    value: Union[Coefficients, ScalarValue, None] = None


class CheckModel(BaseModel):
    assertion: str
    expect: str
    passed: bool
    residual: ResidualValue
    description: str = ""


class CertificateReport(Report):
    """Self-contained certificate: ring/algebra spec, objects and checks."""
    report: str = "certificate"
    kind: str
    ring: Optional[Dict[str, Any]] = None
    n: Optional[int] = None
    algebra: Optional[Dict[str, Any]] = None
    inputs: Dict[str, Any] = {}
    objects: Dict[str, ObjectValue] = {}
    checks: List[CheckModel] = []
    verdict: str = ""
    passed: bool = True


class AlgebraSummary(BaseModel):
    name: str
    dim: int
    provenance: str
    labels: List[str]
    spec: Dict[str, Any]


class BuildReport(Report):
    report: str = "build"
    algebra: AlgebraSummary
    unit: Coefficients
    validated: bool = True


class VerdictModel(BaseModel):
    """Identity verdict with its replayable witness."""
    identity: str
    status: str
    witness: List[Coefficients] = []
    residual: Optional[Union[Coefficients, ScalarValue]] = None
    seed: Optional[int] = None
    trials: int = 0
    mode: str = ""
    params: Dict[str, int] = {}
    detail: str = ""


class IdentitiesReport(Report):
    report: str = "identities"
    algebra: AlgebraSummary
    verdicts: List[VerdictModel]
    implications_consistent: bool
    expectations: Dict[str, str] = {}
    expectations_met: bool = True


class ConditionModel(BaseModel):
    condition: str
    status: str
    witness: Optional[Dict[str, Any]] = None
    samples: int = 0
    seed: Optional[int] = None
    notes: List[str] = []


class AssumptionsReportModel(Report):
    report: str = "check-assumptions"
    algebra: AlgebraSummary
    events: List[Coefficients]
    conditions: List[ConditionModel]
    passed: bool
    failed: List[str] = []
    certificates: List[CertificateReport] = []
    notes: List[str] = []


class CompatProfileModel(BaseModel):
    e: Coefficients
    f: Coefficients
    flags: Dict[str, bool]
    derived: List[str] = ["10"]
    level: str
    witnesses: Dict[str, Any] = {}
    violations: List[str] = []
    state_readings: Dict[str, bool] = {}


class CompatReport(Report):
    report: str = "compat"
    algebra: AlgebraSummary
    profiles: List[CompatProfileModel]
    level_counts: Dict[str, int]
    consistent: bool


class SpectralPair(BaseModel):
    eigenvalue: ScalarValue
    idempotent: Coefficients


class SpectralReport(Report):
    report: str = "spectral"
    algebra: AlgebraSummary
    element: Coefficients
    exact: bool
    minimal_polynomial: List[ScalarValue]
    pairs: List[SpectralPair]
    norm: float
    positive: str


class ScreenReportModel(Report):
    report: str = "screen"
    ring: str
    n: int
    verdict: str
    reason: str
    flags: List[str] = []
    certificates: List[CertificateReport] = []


class ReplayReport(Report):
    report: str = "replay"
    source: str
    replayed: List[str]
    passed: bool
