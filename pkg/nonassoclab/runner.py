"""Runner code for nonassoclab: validated spec documents in, report models out."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from pydantic import ValidationError

from nonassoclab.algebra import CommAlgebra, Element, State, algebra_to_spec, build_algebra, trace_state
from nonassoclab.certificates import (
    Certificate,
    alternativity_derivation_certificate,
    associativity_derivation_certificate,
    candidate_screen,
    certificate_from_model,
    certificate_to_model,
    coefficients,
    conjugation_certificate,
    element_from_coefficients,
    find_alternativity_pair,
    find_nilpotent_alpha,
    golden_idempotent_certificate,
    jordan_failure_search,
    nilpotent_violation_certificate,
    plain,
    ring_element_from_coefficients,
)
from nonassoclab.compat import compat_batch, compat_profile, random_event_pairs
from nonassoclab.const import (
    ALGEBRA,
    ALTERNATIVITY,
    ASSOCIATIVITY,
    BUILD,
    CERTIFY,
    CHECK_ASSUMPTIONS,
    COMPAT,
    CONJUGATION,
    DEFAULT_SEED,
    DEFAULT_TOL,
    DEFAULT_TRIALS,
    ELEMENT,
    EVENTS,
    EXIT_CHECK_FAILED,
    EXIT_OK,
    FAILS,
    GOLDEN,
    HERMITIAN_MATRIX,
    IDENTITIES,
    INVOLUTION,
    JORDAN_FAILURE,
    JSON,
    NAMED,
    NILPOTENT,
    PAIR,
    REPLAY,
    RING,
    SCREEN,
    SPECTRAL,
    STATES,
)
from nonassoclab.events import POSITIVE_PROJECTION, Event, certify_event, check_assumptions, default_events, find_golden_alpha
from nonassoclab.helper.exceptions import ConfigurationException, ParseError, ReplayMismatch
from nonassoclab.identities import (
    ASSOCIATIVE,
    FORMALLY_REAL,
    JORDAN,
    LINEARIZED,
    POWER_ASSOCIATIVE,
    Verdict,
    check_formally_real_sampled,
    identity_residual,
    implication_audit,
)
from nonassoclab.models import (
    AlgebraSummary,
    AssumptionsReportModel,
    BuildReport,
    CertificateReport,
    CompatProfileModel,
    CompatReport,
    ConditionModel,
    IdentitiesReport,
    ReplayReport,
    Report,
    ScreenReportModel,
    SpectralPair,
    SpectralReport,
    VerdictModel,
)
from nonassoclab.ring import RingElement, StarRing, associativity_check, build_ring
from nonassoclab.scalar import format_scalar, parse_rational
from nonassoclab.spectral import is_positive, order_unit_norm, spectral_resolution

_LOGGER = logging.getLogger(__name__)

CERTIFICATE_KINDS = (GOLDEN, NILPOTENT, ALTERNATIVITY, ASSOCIATIVITY, CONJUGATION, SCREEN, JORDAN_FAILURE)
IDENTITY_KEYS = (ASSOCIATIVE, JORDAN, POWER_ASSOCIATIVE, FORMALLY_REAL)


@dataclass
class RunConfig:
    """Everything a command depends on; equal configs give byte-identical reports."""

    command: str
    spec_path: Optional[str] = None
    seed: int = DEFAULT_SEED
    tol: float = DEFAULT_TOL
    trials: int = DEFAULT_TRIALS
    output_format: str = JSON
    expectations: Dict[str, str] = field(default_factory=dict)


@dataclass
class RunResult:
    report: Report
    exit_code: int = EXIT_OK


@dataclass
class CertifyParams:
    kind: str
    ring: Optional[str] = None
    n: Optional[int] = None
    alpha: Optional[str] = None
    beta: Optional[str] = None
    gamma: Optional[str] = None
    involution: Optional[str] = None
    budget: int = 1000


def summarize(algebra: CommAlgebra) -> AlgebraSummary:
    return AlgebraSummary(
        name=algebra.name,
        dim=algebra.dim,
        provenance=algebra.provenance,
        labels=list(algebra.labels),
        spec=algebra_to_spec(algebra),
    )


def parse_inline(text: str, location: str = "--element") -> Dict[str, Any]:
    """`label=value,label=value` with rational values."""
    values: Dict[str, Any] = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        label, sep, raw = item.partition("=")
        if not sep or not label.strip():
            raise ParseError(f"Expected label=value, got {item!r}", location)
        values[label.strip()] = format_scalar(parse_rational(raw.strip(), f"{location}.{label.strip()}"))
    return values


def algebra_from_spec(spec: Mapping[str, Any]) -> CommAlgebra:
    if ALGEBRA not in spec:
        raise ParseError("Spec has no algebra section", ALGEBRA)
    return build_algebra(spec[ALGEBRA])


def events_from_spec(algebra: CommAlgebra, spec: Mapping[str, Any], config: RunConfig) -> List[Event]:
    if not spec.get(EVENTS):
        return default_events(algebra, config.seed, tol=config.tol)
    return [
        certify_event(algebra, element_from_coefficients(algebra, coeffs, f"{EVENTS}[{k}]"), config.tol, f"event{k}")
        for k, coeffs in enumerate(spec[EVENTS])
    ]


def states_from_spec(algebra: CommAlgebra, spec: Mapping[str, Any]) -> Optional[List[State]]:
    if not spec.get(STATES):
        return None
    states = []
    for k, coeffs in enumerate(spec[STATES]):
        state = trace_state(algebra, element_from_coefficients(algebra, coeffs, f"{STATES}[{k}]"), f"state{k}")
        if state is None:
            raise ParseError("Density has zero trace", f"{STATES}[{k}]")
        states.append(state)
    return states


def _expectations_met(observed: Mapping[str, str], expectations: Mapping[str, str]) -> bool:
    for key, wanted in expectations.items():
        if key not in observed:
            raise ConfigurationException(f"Unknown expectation {key!r}. Known: {', '.join(sorted(observed))}")
        if observed[key] != wanted:
            _LOGGER.warning("Expected %s=%s, observed %s", key, wanted, observed[key])
            return False
    return True


def _exit(passed: bool, observed: Mapping[str, str], config: RunConfig) -> int:
    if config.expectations:
        return EXIT_OK if _expectations_met(observed, config.expectations) else EXIT_CHECK_FAILED
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def cmd_build(spec: Mapping[str, Any], config: RunConfig) -> RunResult:
    algebra = algebra_from_spec(spec)
    algebra.validate()
    _LOGGER.info("dim %d, %s", algebra.dim, algebra.provenance)
    return RunResult(BuildReport(algebra=summarize(algebra), unit=coefficients(algebra.unit)))


def verdict_model(verdict: Verdict) -> VerdictModel:
    return VerdictModel(
        identity=verdict.identity,
        status=verdict.status,
        witness=[coefficients(x) for x in verdict.witness],
        residual=plain(verdict.residual),
        seed=verdict.seed,
        trials=verdict.trials,
        mode=verdict.mode,
        params=dict(verdict.params),
        detail=verdict.detail,
    )


def cmd_identities(spec: Mapping[str, Any], config: RunConfig) -> RunResult:
    algebra = algebra_from_spec(spec)
    audit = implication_audit(algebra, config.trials, config.seed, LINEARIZED)
    verdicts = [
        audit.associative,
        audit.jordan,
        audit.power_associative,
        check_formally_real_sampled(algebra, config.trials, config.seed, config.tol),
    ]
    observed = {v.identity: "holds" if v.holds else "fails" for v in verdicts}
    report = IdentitiesReport(
        seed=config.seed,
        algebra=summarize(algebra),
        verdicts=[verdict_model(v) for v in verdicts],
        implications_consistent=audit.consistent,
        expectations=dict(config.expectations),
        expectations_met=_expectations_met(observed, config.expectations),
    )
    # a profile report; only --expect or a broken implication chain fails the run
    return RunResult(report, _exit(audit.consistent, observed, config))


def _golden_support(algebra: CommAlgebra) -> List[CertificateReport]:
    if algebra.provenance != HERMITIAN_MATRIX or algebra.info["n"] < 2:
        return []
    alpha = find_golden_alpha(algebra.info["ring"])
    if alpha is None:
        return []
    return [certificate_to_model(golden_idempotent_certificate(algebra.info["ring"], alpha))]


def cmd_check_assumptions(spec: Mapping[str, Any], config: RunConfig) -> RunResult:
    algebra = algebra_from_spec(spec)
    events = events_from_spec(algebra, spec, config)
    result = check_assumptions(algebra, events, states_from_spec(algebra, spec), seed=config.seed, tol=config.tol)
    certificates = _golden_support(algebra) if POSITIVE_PROJECTION in result.failed() else []
    notes = ["finite dimension: the predual and weak* topology collapse to the state space"]
    report = AssumptionsReportModel(
        seed=config.seed,
        algebra=summarize(algebra),
        events=[coefficients(ev.element) for ev in events],
        conditions=[
            ConditionModel(
                condition=c.condition,
                status=c.status,
                witness=plain(c.witness),
                samples=c.samples,
                seed=c.seed,
                notes=list(c.notes),
            )
            for c in result.conditions.values()
        ],
        passed=result.passed,
        failed=result.failed(),
        certificates=certificates,
        notes=notes,
    )
    observed = {c.condition: c.status for c in result.conditions.values()}
    observed["assumptions"] = "passed" if result.passed else "failed"
    return RunResult(report, _exit(result.passed, observed, config))


def pair_from_spec(algebra: CommAlgebra, pair: Mapping[str, Any], tol: float) -> Tuple[Event, Event]:
    e = element_from_coefficients(algebra, pair["e"], f"{PAIR}.e")
    f = element_from_coefficients(algebra, pair["f"], f"{PAIR}.f")
    return certify_event(algebra, e, tol, "e"), certify_event(algebra, f, tol, "f")


def profile_model(profile) -> CompatProfileModel:
    return CompatProfileModel(
        e=coefficients(profile.e),
        f=coefficients(profile.f),
        flags={str(k): v for k, v in sorted(profile.flags.items())},
        level=profile.level,
        witnesses={str(k): plain(v) for k, v in sorted(profile.witnesses.items())},
        violations=list(profile.violations),
        state_readings=dict(profile.state_readings),
    )


def cmd_compat(spec: Mapping[str, Any], config: RunConfig, pair: Optional[Mapping[str, Any]] = None) -> RunResult:
    algebra = algebra_from_spec(spec)
    pair = pair or spec.get(PAIR)
    if pair:
        pairs = [pair_from_spec(algebra, pair, config.tol)]
    else:
        pairs = random_event_pairs(algebra, config.trials, config.seed, tol=config.tol)
    batch = compat_batch(algebra, pairs, states_from_spec(algebra, spec), config.tol)
    report = CompatReport(
        seed=config.seed,
        algebra=summarize(algebra),
        profiles=[profile_model(p) for p in batch.profiles],
        level_counts=dict(sorted(batch.level_counts.items())),
        consistent=batch.consistent,
    )
    observed = {"consistent": str(batch.consistent).lower()}
    if len(batch.profiles) == 1:
        observed["level"] = batch.profiles[0].level
    return RunResult(report, _exit(batch.consistent, observed, config))


def element_from_input(algebra: CommAlgebra, spec: Mapping[str, Any], inline: Optional[str]) -> Element:
    if inline:
        return element_from_coefficients(algebra, parse_inline(inline), "--element")
    if spec.get(ELEMENT):
        return element_from_coefficients(algebra, spec[ELEMENT], ELEMENT)
    raise ParseError("No element given; use --element or an element section", ELEMENT)


def cmd_spectral(spec: Mapping[str, Any], config: RunConfig, inline: Optional[str] = None) -> RunResult:
    algebra = algebra_from_spec(spec)
    x = element_from_input(algebra, spec, inline)
    resolution = spectral_resolution(algebra, x, config.tol)
    report = SpectralReport(
        seed=config.seed,
        algebra=summarize(algebra),
        element=coefficients(x),
        exact=resolution.exact,
        minimal_polynomial=[format_scalar(c) for c in resolution.minimal_polynomial],
        pairs=[SpectralPair(eigenvalue=format_scalar(t), idempotent=coefficients(e)) for t, e in resolution.pairs],
        norm=float(order_unit_norm(algebra, x, config.tol)),
        positive=is_positive(algebra, x, config.tol),
    )
    observed = {"positive": report.positive, "exact": str(resolution.exact).lower()}
    return RunResult(report, _exit(True, observed, config))


def _ring_for(params: CertifyParams, spec: Mapping[str, Any]) -> StarRing:
    if params.ring:
        if params.involution:
            return build_ring({NAMED: params.ring, INVOLUTION: params.involution}, "--ring")
        return build_ring(params.ring, "--ring")
    if spec.get(RING):
        return build_ring(spec[RING])
    raise ParseError("No ring given; use --ring or a ring section", RING)


def _ring_input(ring: StarRing, text: Optional[str], name: str) -> Optional[RingElement]:
    if not text:
        return None
    return ring_element_from_coefficients(ring, parse_inline(text, f"--{name}"), f"--{name}")


def _required(value: Optional[Any], what: str) -> Any:
    if value is None:
        raise ConfigurationException(f"No {what} found; pass it explicitly")
    return value


def _build_certificate(params: CertifyParams, spec: Mapping[str, Any], config: RunConfig) -> Certificate:
    if params.kind == JORDAN_FAILURE:
        if ALGEBRA in spec and not params.ring:
            algebra = algebra_from_spec(spec)
        else:
            algebra = build_algebra({"hermitian": {RING: params.ring or spec.get(RING, "octonions"), "n": params.n or 4}})
        return jordan_failure_search(algebra, config.seed, params.budget)
    ring = _ring_for(params, spec)
    alpha = _ring_input(ring, params.alpha, "alpha")
    beta = _ring_input(ring, params.beta, "beta")
    gamma = _ring_input(ring, params.gamma, "gamma")
    if params.kind == GOLDEN:
        return golden_idempotent_certificate(ring, alpha or _required(find_golden_alpha(ring), "alpha with alpha* alpha = -1"))
    if params.kind == NILPOTENT:
        return nilpotent_violation_certificate(ring, alpha or _required(find_nilpotent_alpha(ring), "alpha with alpha* alpha = 0"))
    if params.kind == ALTERNATIVITY:
        if alpha is None or beta is None:
            alpha, beta = _required(find_alternativity_pair(ring), "unit-norm alternativity witness")
        return alternativity_derivation_certificate(ring, alpha, beta)
    if params.kind == ASSOCIATIVITY:
        if alpha is None or beta is None or gamma is None:
            verdict = associativity_check(ring)
            alpha, beta, gamma = verdict.witness or (ring.one(), ring.one(), ring.one())
        return associativity_derivation_certificate(ring, alpha, beta, gamma)
    if params.kind == CONJUGATION:
        return conjugation_certificate(ring)
    raise ConfigurationException(f"Unknown certificate kind {params.kind!r}. Known: {', '.join(CERTIFICATE_KINDS)}")


def cmd_certify(params: CertifyParams, spec: Mapping[str, Any], config: RunConfig) -> RunResult:
    if params.kind == SCREEN:
        ring = _ring_for(params, spec)
        screen = candidate_screen(ring, params.n or spec.get("n") or 2)
        report = ScreenReportModel(
            seed=config.seed,
            ring=screen.ring,
            n=screen.n,
            verdict=screen.verdict,
            reason=screen.reason,
            flags=screen.flags,
            certificates=[certificate_to_model(c) for c in screen.certificates],
        )
        passed = all(c.passed for c in screen.certificates)
        return RunResult(report, _exit(passed, {"verdict": screen.verdict}, config))
    cert = _build_certificate(params, spec, config)
    if cert.seed is None:
        cert.seed = config.seed
    report = certificate_to_model(cert)
    return RunResult(report, _exit(cert.passed, {"verdict": cert.verdict}, config))


def _replay_certificates(models: Sequence[CertificateReport]) -> List[str]:
    replayed = []
    for model in models:
        certificate_from_model(model).replay()
        replayed.append(model.kind)
    return replayed


def _replay_identities(report: IdentitiesReport) -> List[str]:
    algebra = build_algebra(report.algebra.spec)
    replayed = []
    for verdict in report.verdicts:
        if verdict.status != FAILS or not verdict.witness:
            continue
        witness = [element_from_coefficients(algebra, w, f"verdicts.{verdict.identity}") for w in verdict.witness]
        residual = identity_residual(verdict.identity, witness, verdict.params)
        if plain(residual) != verdict.residual:
            raise ReplayMismatch(f"{verdict.identity}: residual {plain(residual)} recorded as {verdict.residual}")
        replayed.append(verdict.identity)
    return replayed


def _replay_compat(report: CompatReport, tol: float) -> List[str]:
    algebra = build_algebra(report.algebra.spec)
    for k, profile in enumerate(report.profiles):
        e, f = pair_from_spec(algebra, {"e": profile.e, "f": profile.f}, tol)
        again = compat_profile(algebra, e, f, tol=tol)
        if {str(i): v for i, v in again.flags.items()} != profile.flags:
            raise ReplayMismatch(f"Compat profile {k} replayed with different flags")
    return [f"profile{k}" for k in range(len(report.profiles))]


def _replay_spectral(report: SpectralReport, tol: float) -> List[str]:
    algebra = build_algebra(report.algebra.spec)
    x = element_from_coefficients(algebra, report.element, ELEMENT)
    again = [format_scalar(t) for t in spectral_resolution(algebra, x, tol).eigenvalues]
    recorded = [p.eigenvalue for p in report.pairs]
    if report.exact and again != recorded:
        raise ReplayMismatch(f"Eigenvalues {again} recorded as {recorded}")
    if not report.exact and any(abs(float(a) - float(b)) > 1e-6 for a, b in zip(again, recorded)):
        raise ReplayMismatch(f"Eigenvalues {again} recorded as {recorded}")
    return ["spectrum"]


def _replay_build(report: BuildReport) -> List[str]:
    algebra = build_algebra(report.algebra.spec)
    if algebra.dim != report.algebra.dim or list(algebra.labels) != report.algebra.labels:
        raise ReplayMismatch(f"{algebra.name} rebuilt with dimension {algebra.dim}")
    return ["build"]


REPLAYERS: Dict[str, Tuple[type, Callable[[Any, float], List[str]]]] = {
    "certificate": (CertificateReport, lambda r, tol: _replay_certificates([r])),
    "screen": (ScreenReportModel, lambda r, tol: _replay_certificates(r.certificates)),
    CHECK_ASSUMPTIONS: (AssumptionsReportModel, lambda r, tol: _replay_certificates(r.certificates)),
    IDENTITIES: (IdentitiesReport, lambda r, tol: _replay_identities(r)),
    COMPAT: (CompatReport, _replay_compat),
    SPECTRAL: (SpectralReport, _replay_spectral),
    BUILD: (BuildReport, lambda r, tol: _replay_build(r)),
}


def cmd_replay(path: str, config: RunConfig) -> RunResult:
    """Re-verify a stored report without regenerating it; mismatches raise ReplayMismatch."""
    try:
        with open(path, "r") as stream:
            data = json.load(stream)
    except FileNotFoundError as err:
        raise ConfigurationException(f"Report {path} not found") from err
    except json.JSONDecodeError as err:
        raise ParseError(f"Not a JSON report: {err.msg}", f"{path}:{err.lineno}") from err
    kind = data.get("report") if isinstance(data, dict) else None
    if kind not in REPLAYERS:
        raise ParseError(f"Unknown report type {kind!r}", path)
    model_cls, replayer = REPLAYERS[kind]
    try:
        model = model_cls.model_validate(data)
    except ValidationError as err:
        raise ParseError(f"Malformed {kind} report: {err.errors()[0]['msg']}", path) from err
    replayed = replayer(model, config.tol)
    _LOGGER.info("Replayed %d item(s) from %s", len(replayed), path)
    return RunResult(ReplayReport(seed=model.seed, source=kind, replayed=replayed, passed=True))


def dump_report(report: Report, output_format: str = JSON) -> str:
    if output_format == JSON:
        return report.model_dump_json(indent=2, by_alias=True)
    return render_text(report)


def render_text(report: Report) -> str:
    """Human-readable summary; the JSON form is the replayable one."""
    lines = [f"{report.report} (schema {report.schema_version}, seed {report.seed})"]
    algebra = getattr(report, "algebra", None)
    if isinstance(algebra, AlgebraSummary):
        lines.append(f"dim {algebra.dim}, {algebra.provenance}: {algebra.name}")
    if isinstance(report, BuildReport):
        lines.append("basis: " + " ".join(report.algebra.labels))
    elif isinstance(report, IdentitiesReport):
        lines += [f"  {v.identity}: {v.status} ({v.mode or 'exact'})" for v in report.verdicts]
    elif isinstance(report, AssumptionsReportModel):
        lines += [f"  {c.condition}: {c.status}" + (f" ({'; '.join(c.notes)})" if c.notes else "") for c in report.conditions]
        lines += [f"  certificate {c.kind}: {c.verdict}" for c in report.certificates]
    elif isinstance(report, CompatReport):
        lines += [f"  {level}: {count}" for level, count in report.level_counts.items()]
        lines.append(f"  chain consistent: {report.consistent}")
    elif isinstance(report, SpectralReport):
        lines += [f"  {p.eigenvalue}: {p.idempotent}" for p in report.pairs]
        lines.append(f"  norm {report.norm:.12g}, {report.positive}")
    elif isinstance(report, ScreenReportModel):
        lines.append(f"{report.ring}, n={report.n}: {report.verdict} ({report.reason})")
        lines += [f"  flag: {flag}" for flag in report.flags]
        lines += [f"  certificate {c.kind}: {c.verdict}" for c in report.certificates]
    elif isinstance(report, CertificateReport):
        lines.append(f"{report.kind}: {report.verdict}")
        lines += [f"  [{'ok' if c.passed else 'FAIL'}] {c.assertion}: {c.description}" for c in report.checks]
    elif isinstance(report, ReplayReport):
        lines.append(f"{report.source}: replayed {', '.join(report.replayed) or 'nothing'}")
    return "\n".join(lines)


COMMANDS = (BUILD, IDENTITIES, CHECK_ASSUMPTIONS, COMPAT, SPECTRAL, CERTIFY, REPLAY)

__all__ = [
    "COMMANDS",
    "CertifyParams",
    "RunConfig",
    "RunResult",
    "cmd_build",
    "cmd_certify",
    "cmd_check_assumptions",
    "cmd_compat",
    "cmd_identities",
    "cmd_replay",
    "cmd_spectral",
    "dump_report",
    "parse_inline",
]
