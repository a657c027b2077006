"""Command-line driver: run verification suites and write deterministic reports.

Exit codes: 0 all checks passed, 1 at least one check failed, 2 configuration
problem (bad flags, unreadable or invalid config file), 3 output I/O failure.
The QGATELAB_OUT_DIR environment variable redirects the report into that
directory (keeping the configured file name).
"""

import argparse
import json
import os
import sys

from .report import serialize_report
from .suites import RunConfig, run_suites

__all__ = ["build_parser", "main"]

ENV_OUT_DIR = "QGATELAB_OUT_DIR"

_COMMAND_SUITES = {
    "verify-algebra": "algebra",
    "verify-gates": "gates",
    "discover": "constraints",
    "limit-study": "limits",
    "all": "all",
}

_COMMAND_HELP = {
    "verify-algebra": "check the deformed ladder-operator relations",
    "verify-gates": "check gate tables, involutions and deformed closures",
    "discover": "sweep psi grids and score the claimed parameter constraints",
    "limit-study": "study the q -> 1 classical limit",
    "all": "run every suite",
}

_CONFIG_KEYS = {
    "q_values",
    "cutoff",
    "psi_grid",
    "limit_q",
    "operator",
    "exponent",
    "identity_threshold",
    "limit_threshold",
    "out",
    "format",
}

_OPERATOR_TOKENS = ("matrix-element", "left-scaling")
_EXPONENT_TOKENS = ("result", "vacuum")


class ConfigError(Exception):
    pass


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="PATH", help="JSON config file; flags override its keys")
    parser.add_argument("--q", metavar="LIST", help="comma-separated q values, e.g. 0.5,2")
    parser.add_argument("--cutoff", metavar="N", help="mode truncation for algebra and limit checks")
    parser.add_argument("--psi", metavar="LIST", help="comma-separated psi grid for the constraint sweep")
    parser.add_argument(
        "--convention",
        metavar="TOKENS",
        help="comma-separated tokens from matrix-element|left-scaling and result|vacuum",
    )
    parser.add_argument("--out", metavar="PATH", help="report path (default report.<format>)")
    parser.add_argument("--format", choices=("json", "csv"), help="report format (default json)")
    parser.add_argument("--threshold", metavar="X", help="identity-check threshold (default 1e-12)")
    parser.add_argument(
        "--limit-threshold", metavar="X", help="limit-comparison threshold (default 1e-6)"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgatelab",
        description="Verify deformed oscillator relations and the qubit gates built from them.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")
    for command, text in _COMMAND_HELP.items():
        sub = subparsers.add_parser(command, help=text, description=text)
        _add_common_flags(sub)
    return parser


def _parse_floats(text: str, flag: str) -> tuple:
    try:
        values = tuple(float(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise ConfigError(f"{flag} expects comma-separated numbers: {exc}") from None
    if not values:
        raise ConfigError(f"{flag} expects at least one number")
    return values


def _parse_convention(text: str) -> dict:
    settings = {}
    for token in (part.strip() for part in text.split(",")):
        if not token:
            continue
        if token in _OPERATOR_TOKENS:
            settings["operator"] = token
        elif token in _EXPONENT_TOKENS:
            settings["exponent"] = token
        else:
            raise ConfigError(
                f"unknown convention token {token!r}; expected one of "
                f"{', '.join(_OPERATOR_TOKENS + _EXPONENT_TOKENS)}"
            )
    return settings


def _load_config_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError(f"config file {path} must hold a JSON object")
    unknown = set(data) - _CONFIG_KEYS
    if unknown:
        raise ConfigError(f"config file {path} has unknown keys: {', '.join(sorted(unknown))}")
    return data


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Merge defaults, config file, then flags into a validated RunConfig."""
    settings = {"suite": _COMMAND_SUITES[args.command]}
    if args.config:
        settings.update(_load_config_file(args.config))
    if args.q is not None:
        settings["q_values"] = _parse_floats(args.q, "--q")
    if args.cutoff is not None:
        try:
            settings["cutoff"] = int(args.cutoff)
        except ValueError:
            raise ConfigError(f"--cutoff expects an integer, got {args.cutoff!r}") from None
    if args.psi is not None:
        settings["psi_grid"] = _parse_floats(args.psi, "--psi")
    if args.convention is not None:
        settings.update(_parse_convention(args.convention))
    if args.out is not None:
        settings["out"] = args.out
    if args.format is not None:
        settings["format"] = args.format
    if args.threshold is not None:
        settings["identity_threshold"] = _parse_floats(args.threshold, "--threshold")[0]
    if args.limit_threshold is not None:
        settings["limit_threshold"] = _parse_floats(args.limit_threshold, "--limit-threshold")[0]
    try:
        return RunConfig(**settings)
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from None


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve_config(args)
    except ConfigError as exc:
        print(f"qgatelab: configuration error: {exc}", file=sys.stderr)
        return 2

    report = run_suites(cfg)
    payload = serialize_report(report, cfg.format)

    out_path = cfg.out if cfg.out else f"report.{cfg.format}"
    env_dir = os.environ.get(ENV_OUT_DIR)
    if env_dir:
        out_path = os.path.join(env_dir, os.path.basename(out_path))
    try:
        with open(out_path, "wb") as handle:
            handle.write(payload)
    except OSError as exc:
        print(f"qgatelab: cannot write report to {out_path}: {exc}", file=sys.stderr)
        return 3

    summary = report.summary()
    print(f"{summary['passed']}/{summary['total']} checks passed -> {out_path}")
    return 0 if summary["failed"] == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
