"""nonassoclab command line."""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, Dict, Optional

from yaml import MarkedYAMLError

from nonassoclab.const import (
    ACTION,
    BUILD,
    CERTIFY,
    CHECK_ASSUMPTIONS,
    COMPAT,
    DEFAULT_TOL,
    DEFAULT_TRIALS,
    EXIT_CHECK_FAILED,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    IDENTITIES,
    JSON,
    LOGGER,
    PAIR,
    REPLAY,
    SPECTRAL,
    TEXT,
)
from nonassoclab.helper.exceptions import ConfigurationException, NonAssocLabException, ReplayMismatch
from nonassoclab.helper.logger import configure_logger, setup_logging
from nonassoclab.helper.util import parse_expectations, resolve_seed
from nonassoclab.helper.yaml_util import load_spec_from_file
from nonassoclab.runner import (
    CERTIFICATE_KINDS,
    CertifyParams,
    RunConfig,
    RunResult,
    cmd_build,
    cmd_certify,
    cmd_check_assumptions,
    cmd_compat,
    cmd_identities,
    cmd_replay,
    cmd_spectral,
    dump_report,
)
from nonassoclab.version import __version__

_LOGGER = logging.getLogger(__name__)


def _common(parser: argparse.ArgumentParser, spec: str = "required") -> None:
    parser.add_argument(
        "--debug",
        "-d",
        action="count",
        help="Debug output, -dd also logs to a file",
        default=0,
    )
    if spec == "required":
        parser.add_argument("spec", metavar="path_to_spec", help="YAML or JSON spec file")
    elif spec == "optional":
        parser.add_argument("spec", metavar="path_to_spec", nargs="?", help="YAML or JSON spec file")
    parser.add_argument("--seed", type=int, help="Seed, falls back to NONASSOC_LAB_SEED")
    parser.add_argument("--tol", type=float, default=DEFAULT_TOL, help="Float tolerance")
    parser.add_argument("--trials", type=int, default=DEFAULT_TRIALS, help="Sampled trials")
    parser.add_argument(
        "--expect",
        action="append",
        metavar="key=value",
        help="Expected outcome, e.g. jordan=holds; exit code 1 when not met",
    )
    parser.add_argument("--format", dest="output_format", choices=[JSON, TEXT], default=JSON)


def get_arguments(argv: Optional[list] = None) -> argparse.Namespace:
    """Get parsed passed in arguments."""

    parser = argparse.ArgumentParser(
        description="Lab for nonassociative order-unit algebras and their quantum events.",
    )
    subparsers = parser.add_subparsers(dest=ACTION, required=True)
    _common(subparsers.add_parser(BUILD, help="Build an algebra and print its summary"))
    _common(subparsers.add_parser(IDENTITIES, help="Check the identity profile"))
    _common(subparsers.add_parser(CHECK_ASSUMPTIONS, help="Check the event-structure assumptions"))
    compat_parser = subparsers.add_parser(COMPAT, help="Classify compatibility of event pairs")
    _common(compat_parser)
    compat_parser.add_argument("--pair", metavar="path", help="Spec file with a pair: {e, f} section")
    spectral_parser = subparsers.add_parser(SPECTRAL, help="Spectral resolution of an element")
    _common(spectral_parser)
    spectral_parser.add_argument("--element", help="Inline element, label=value,...")
    certify_parser = subparsers.add_parser(CERTIFY, help="Build a replayable certificate")
    certify_parser.add_argument("kind", choices=CERTIFICATE_KINDS)
    _common(certify_parser, spec="optional")
    certify_parser.add_argument("--ring", help="Named ring, e.g. split-complex")
    certify_parser.add_argument("--involution", choices=["both", "right"], help="Tensor ring involution")
    certify_parser.add_argument("--n", type=int, help="Matrix size")
    certify_parser.add_argument("--alpha", help="Ring element, label=value,...")
    certify_parser.add_argument("--beta", help="Ring element, label=value,...")
    certify_parser.add_argument("--gamma", help="Ring element, label=value,...")
    certify_parser.add_argument("--budget", type=int, default=1000, help="Search budget for jordan-failure")
    certify_parser.add_argument("--replay", metavar="path", help="Re-verify a stored certificate instead")
    replay_parser = subparsers.add_parser(REPLAY, help="Re-verify a stored report")
    _common(replay_parser, spec="none")
    replay_parser.add_argument("report", metavar="path_to_report")
    parser.add_argument("--version", action="version", version=__version__)
    return parser.parse_args(argv)


def _load(path: Optional[str], debug: int) -> Dict[str, Any]:
    if not path:
        configure_logger(log_config={}, debug=debug)
        return {}
    spec = load_spec_from_file(path)
    configure_logger(log_config=spec.get(LOGGER), debug=debug)
    return spec


def dispatch(args: argparse.Namespace, config: RunConfig) -> RunResult:
    if args.action == REPLAY or (args.action == CERTIFY and args.replay):
        configure_logger(log_config={}, debug=args.debug)
        return cmd_replay(args.report if args.action == REPLAY else args.replay, config)
    spec = _load(args.spec, args.debug)
    if args.action == BUILD:
        return cmd_build(spec, config)
    if args.action == IDENTITIES:
        return cmd_identities(spec, config)
    if args.action == CHECK_ASSUMPTIONS:
        return cmd_check_assumptions(spec, config)
    if args.action == COMPAT:
        pair = load_spec_from_file(args.pair).get(PAIR) if args.pair else None
        return cmd_compat(spec, config, pair)
    if args.action == SPECTRAL:
        return cmd_spectral(spec, config, args.element)
    params = CertifyParams(
        kind=args.kind,
        ring=args.ring,
        n=args.n,
        alpha=args.alpha,
        beta=args.beta,
        gamma=args.gamma,
        involution=args.involution,
        budget=args.budget,
    )
    return cmd_certify(params, spec, config)


def run(args: argparse.Namespace) -> int:
    """Run one command and print its report on stdout."""
    setup_logging(debug_level=args.debug)
    try:
        config = RunConfig(
            command=args.action,
            spec_path=getattr(args, "spec", None),
            seed=resolve_seed(args.seed),
            tol=args.tol,
            trials=args.trials,
            output_format=args.output_format,
            expectations=parse_expectations(args.expect),
        )
        result = dispatch(args, config)
    except (ConfigurationException, MarkedYAMLError) as err:
        _LOGGER.error("Failed to load spec. %s", err)
        return EXIT_INPUT_ERROR
    except ReplayMismatch as err:
        _LOGGER.error("Replay failed. %s", err)
        return EXIT_CHECK_FAILED
    except NonAssocLabException as err:
        _LOGGER.error("Check failed. %s", err)
        return EXIT_CHECK_FAILED
    print(dump_report(result.report, config.output_format))
    return result.exit_code


def main(argv: Optional[list] = None) -> int:
    """Start nonassoclab."""

    args = get_arguments(argv)
    exit_code = run(args)
    if exit_code == EXIT_OK:
        _LOGGER.info("Exiting with exit code %s", exit_code)
    else:
        _LOGGER.error("Exiting with exit code %s", exit_code)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
