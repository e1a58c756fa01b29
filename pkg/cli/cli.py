#!/usr/bin/env python3
"""
symcone CLI - generating functions of symmetric cones of types A, B, D.

    symcone genfunc --kind B --n 3 --a 2,4
    symcone series  --kind B --n 3 --a 2,4 --N 9
    symcone verify  lecture-hall --n 3 --d 1 --c 0 --b 0 --N 9
    symcone stats   --m 2 --format csv

Exit codes: 0 success, 1 verification failed, 2 invalid spec,
3 expansion impossible. Negative weights need the ``--a=-1,2`` form.
"""

from __future__ import annotations

import argparse
from argparse import Namespace
from pathlib import Path
from typing import List, Optional, Sequence
import sys

from cli.render import emit, render_report, render_series, render_stats, render_terms
from config.settings import ConfigManager
from conegeom.cone import ConeSpec, cone_spec, default_weights
from coxeter.descents import element_stats
from coxeter.group import Kind, enumerate_group
from genfunc.builders import build_closed_form, build_general
from genfunc.expansion import expand
from identities.verify import (
    Verification,
    verify_all,
    verify_almost_constant,
    verify_comaj_distribution,
    verify_eqn_ps,
    verify_eulerian_identity,
    verify_joint_chow_gessel,
    verify_lecture_hall_corollary,
    verify_oracle,
    verify_triangulation,
)
from monitoring.structured_logger import configure_logging, get_logger, log_event
from validation.error_protocol import (
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    SpecificationError,
    SymconeError,
    classify_exception,
    report_failure,
)

logger = get_logger("cli")

SUITES = (
    "oracle",
    "triangulation",
    "eulerian",
    "comaj",
    "chow-gessel",
    "almost-constant",
    "lecture-hall",
    "eqn-ps",
    "all",
)


def int_vector(text: str) -> List[int]:
    """Parse a comma-separated integer list such as '2,4' or '-1,2'."""
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from exc


def _require(args: Namespace, *names: str) -> None:
    missing = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name) is None]
    if missing:
        raise SpecificationError(f"{args.cmd} needs {', '.join(missing)}")


def _spec(args: Namespace) -> ConeSpec:
    _require(args, "kind", "n", "a")
    return cone_spec(Kind.parse(args.kind), args.n, args.a)


def _truncation(args: Namespace, cfg: ConfigManager) -> int:
    value = args.N if args.N is not None else cfg.get("series.default_truncation")
    if value < 0:
        raise SpecificationError(f"--N must be >= 0, got {value}")
    return value


def _workers(args: Namespace, cfg: ConfigManager) -> int:
    return args.workers if args.workers is not None else cfg.get("series.workers")


def _fmt(args: Namespace, cfg: ConfigManager) -> str:
    return args.format or cfg.get("output.format")


def cmd_genfunc(args: Namespace, cfg: ConfigManager) -> int:
    """Emit the generating function as a term list (group enumeration order)."""
    spec = _spec(args)
    builder = build_closed_form if args.route == "closed-form" else build_general
    rsum = builder(spec)
    emit(render_terms(rsum, _fmt(args, cfg), cfg.get("output.indent")), args.out)
    return EXIT_OK


def cmd_series(args: Namespace, cfg: ConfigManager) -> int:
    """Emit expand(specialize(build(spec), weights), N)."""
    spec = _spec(args)
    weights = tuple(args.weights) if args.weights is not None else default_weights(spec)
    builder = build_closed_form if args.route == "closed-form" else build_general
    series = expand(
        builder(spec),
        _truncation(args, cfg),
        grading=weights,
        workers=_workers(args, cfg),
        executor=cfg.get("series.executor"),
    )
    emit(render_series(series, _fmt(args, cfg), cfg.get("output.indent")), args.out)
    return EXIT_OK


def _run_suite(args: Namespace, cfg: ConfigManager) -> Verification:
    suite = args.suite
    if suite == "all":
        return verify_all()
    if suite in ("oracle", "triangulation"):
        spec = _spec(args)
        if suite == "oracle":
            return verify_oracle(
                spec,
                _truncation(args, cfg),
                workers=_workers(args, cfg),
                executor=cfg.get("series.executor"),
            )
        return verify_triangulation(spec, args.bound)
    if suite == "eulerian":
        _require(args, "m")
        return verify_eulerian_identity(args.m, _truncation(args, cfg))
    if suite == "comaj":
        _require(args, "m")
        return verify_comaj_distribution(args.m)
    if suite == "chow-gessel":
        _require(args, "m")
        truncation = args.N if args.N is not None else args.m + 2
        return verify_joint_chow_gessel(args.m, truncation)
    if suite == "almost-constant":
        _require(args, "m", "b", "c")
        return verify_almost_constant(args.m, args.b, args.c, _truncation(args, cfg))
    if suite == "lecture-hall":
        _require(args, "n", "d", "c", "b")
        return verify_lecture_hall_corollary(args.n, args.d, args.c, args.b, _truncation(args, cfg))
    _require(args, "n")
    truncation = args.N if args.N is not None else 3
    return verify_eqn_ps(args.n, truncation)


def cmd_verify(args: Namespace, cfg: ConfigManager) -> int:
    """Run one verification suite; exit 1 if any check fails."""
    result = _run_suite(args, cfg)
    emit(render_report(result, _fmt(args, cfg), cfg.get("output.indent")), args.out)
    return EXIT_OK if result.passed else EXIT_VERIFICATION_FAILED


def cmd_stats(args: Namespace, cfg: ConfigManager) -> int:
    """Descent statistics for every element of B_m."""
    _require(args, "m")
    rows = [element_stats(g).as_dict() for g in enumerate_group(Kind.B, args.m)]
    emit(render_stats(rows, _fmt(args, cfg), cfg.get("output.indent")), args.out)
    return EXIT_OK


def _output_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(
        "--format",
        choices=("json", "csv", "text"),
        default=None,
        help="Output format (default from settings: json).",
    )
    parent.add_argument("--out", type=Path, default=None, help="Write output to this file.")
    return parent


def _cone_options(required: bool) -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--kind", choices=("A", "B", "D"), required=required, default=None)
    parent.add_argument("--n", type=int, required=required, default=None, help="Ambient dimension.")
    parent.add_argument(
        "--a",
        type=int_vector,
        required=required,
        default=None,
        help="Comma-separated weights; use --a=-1,2 for a negative first entry.",
    )
    return parent


def _series_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--N", type=int, default=None, help="Truncation degree.")
    parent.add_argument("--workers", type=int, default=None, help="Parallel expansion workers.")
    return parent


def build_parser() -> argparse.ArgumentParser:
    """
    Build the CLI argument parser with all symcone commands.

    Returns:
        Configured CLI parser.
    """
    parser = argparse.ArgumentParser(
        prog="symcone",
        description="Exact lattice-point generating functions of symmetric cones",
    )
    parser.add_argument("--config", type=Path, default=None, help="Alternate settings YAML.")
    parser.add_argument("--verbose", action="store_true", help="Log events to stderr.")
    subparsers = parser.add_subparsers(dest="cmd")

    output = _output_options()
    series_opts = _series_options()

    genfunc = subparsers.add_parser(
        "genfunc",
        parents=[_cone_options(True), output],
        help="Emit the generating function as one rational term per group element",
    )
    genfunc.add_argument(
        "--route", choices=("general", "closed-form"), default="general",
        help="general: generator matrix and group action; closed-form: per-kind formula.",
    )
    genfunc.set_defaults(func=cmd_genfunc)

    series = subparsers.add_parser(
        "series",
        parents=[_cone_options(True), series_opts, output],
        help="Expand the generating function as a truncated power series",
    )
    series.add_argument("--weights", type=int_vector, default=None, help="Specialization weights.")
    series.add_argument("--route", choices=("general", "closed-form"), default="general")
    series.set_defaults(func=cmd_series)

    verify = subparsers.add_parser(
        "verify",
        parents=[_cone_options(False), series_opts, output],
        help="Run a verification suite (exit 1 on any failed check)",
    )
    verify.add_argument("suite", choices=SUITES)
    verify.add_argument("--m", type=int, default=None, help="Group rank (n - 1).")
    verify.add_argument("--d", type=int, default=None)
    verify.add_argument("--c", type=int, default=None)
    verify.add_argument("--b", type=int, default=None)
    verify.add_argument("--bound", type=int, default=6, help="Triangulation grading bound.")
    verify.set_defaults(func=cmd_verify)

    stats = subparsers.add_parser(
        "stats",
        parents=[output],
        help="Descent statistics of every signed permutation in B_m",
    )
    stats.add_argument("--m", type=int, required=True)
    stats.set_defaults(func=cmd_stats)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse CLI arguments, execute the selected command, return the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "func"):
        parser.print_help()
        return EXIT_OK

    try:
        cfg = ConfigManager.from_file(args.config)
        configure_logging(
            "INFO" if args.verbose else cfg.get("logging.level"),
            cfg.get("logging.log_file"),
        )
        log_event(logger, "cli.command.started", {"command": args.cmd})
        return args.func(args, cfg)
    except SymconeError as exc:
        signal = classify_exception(exc, source=f"cli.{args.cmd}")
        report_failure(signal)
        print(signal.diagnostic(), file=sys.stderr)
        return signal.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
