"""
DebtDyn - Command Line Interface
simulate / sensitivity / threshold / sweep / example over one scenario file

Data goes to standard output (or --output); diagnostics go to standard error.
Exit codes: 0 success, 1 validation or parse error, 2 arithmetic/domain error.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence, TextIO

from debtdyn import __version__
from debtdyn.core.config import CliSettings
from debtdyn.core.error_handling import (
    EXIT_INPUT_ERROR,
    EXIT_OK,
    DebtDynError,
    ScenarioParseError,
    UsageError,
)
from debtdyn.core.monitoring import StructuredLogger, log_context, setup_logging
from debtdyn.documents.emit import (
    build_result_table,
    build_sensitivity_table,
    build_sweep_table,
    build_threshold_table,
    emit_results,
)
from debtdyn.documents.scenario_io import EXAMPLE_DOCUMENT, ScenarioBundle, parse_scenario_file
from debtdyn.schemas.scenario_file import Units
from debtdyn.services.engine_linear import PropagationConvention
from debtdyn.services.sensitivity import eta_grid, eta_sweep

logger = StructuredLogger("cli")


class _ArgumentParser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so usage errors map to exit code 1"""

    def error(self, message: str):
        raise UsageError(message)


def _global_flags(top_level: bool = True) -> argparse.ArgumentParser:
    """Flags accepted before or after the subcommand.

    Subcommand copies leave unset flags out of the namespace so a value given
    before the subcommand is kept.
    """
    def default(value):
        return value if top_level else argparse.SUPPRESS

    flags = argparse.ArgumentParser(add_help=False)
    flags.add_argument("--format", choices=("csv", "json"), default=default(None), help="output format (default csv)")
    flags.add_argument("--units", choices=("ratio", "percent"), default=default(None),
                       help="display units (default: the file's units)")
    flags.add_argument("--convention", choices=("additive", "ratio"), default=default(None),
                       help="propagation convention (overrides the file)")
    flags.add_argument("--output", type=Path, default=default(None), help="write data here instead of standard output")
    flags.add_argument("--round", type=int, default=default(None), dest="round_digits", metavar="N",
                       help="round displayed values to N decimals")
    flags.add_argument("-v", "--verbose", action="count", default=default(0), help="more diagnostics on standard error")
    flags.add_argument("--log-format", choices=("standard", "json"), default=default("standard"))
    return flags


def build_parser() -> argparse.ArgumentParser:
    flags = _global_flags(top_level=False)
    parser = _ArgumentParser(
        prog="debtdyn",
        description="Debt-to-GDP dynamics under fiscal multiplier feedback",
        parents=[_global_flags()],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    simulate = commands.add_parser("simulate", parents=[flags], help="nominal and perturbed paths, both engines")
    simulate.add_argument("file", type=Path)

    sensitivity = commands.add_parser("sensitivity", parents=[flags], help="first-order sensitivity matrix")
    sensitivity.add_argument("file", type=Path)
    sensitivity.add_argument("--at", type=int, default=None, help="only coefficients observed at period T")

    threshold = commands.add_parser("threshold", parents=[flags], help="austerity threshold per period")
    threshold.add_argument("file", type=Path)

    sweep = commands.add_parser("sweep", parents=[flags], help="evaluate both engines over a multiplier grid")
    sweep.add_argument("file", type=Path)
    sweep.add_argument("--eta-from", type=float, required=True)
    sweep.add_argument("--eta-to", type=float, required=True)
    sweep.add_argument("--eta-steps", type=int, required=True)
    sweep.add_argument("--at", type=int, default=None, help="observation period (default: horizon)")

    commands.add_parser("example", parents=[flags], help="print the built-in ten-year example scenario")
    return parser


def _load(path: Path, convention: Optional[str]) -> ScenarioBundle:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as err:
        raise ScenarioParseError(f"cannot read scenario file {str(path)!r}: {err.strerror}") from None
    bundle = parse_scenario_file(text)
    if convention is not None:
        bundle = bundle._replace(convention=PropagationConvention(convention))
    return bundle


def _run(args: argparse.Namespace, settings: CliSettings) -> str:
    fmt = args.format or settings.DEFAULT_FORMAT
    if args.command == "example":
        return json.dumps(EXAMPLE_DOCUMENT, indent=2) + "\n"

    bundle = _load(args.file, args.convention)
    units = Units(args.units) if args.units else None

    with log_context(
        args.command,
        horizon=bundle.scenario.horizon,
        eta=bundle.multiplier.eta,
        convention=bundle.convention.value,
    ):
        if args.command == "simulate":
            table = build_result_table(bundle, units, args.round_digits)
        elif args.command == "sensitivity":
            table = build_sensitivity_table(bundle, args.at)
        elif args.command == "threshold":
            table = build_threshold_table(bundle)
        else:
            at = args.at if args.at is not None else bundle.scenario.horizon
            records = eta_sweep(
                bundle.scenario,
                bundle.perturbations,
                eta_grid(args.eta_from, args.eta_to, args.eta_steps),
                bundle.convention,
                at,
                max_concurrency=settings.SWEEP_MAX_CONCURRENCY,
            )
            table = build_sweep_table(bundle, records, at, units, args.round_digits)

    return emit_results(table, fmt)


def _write(document: str, output: Optional[Path], stdout: TextIO) -> None:
    if output is None:
        stdout.write(document)
        stdout.flush()
    else:
        output.write_text(document, encoding="utf-8")


def cli_main(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """Run one command; returns the process exit code"""
    stdout = stdout if stdout is not None else sys.stdout
    parser = build_parser()

    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except UsageError as err:
        setup_logging()
        logger.log_error(err)
        sys.stderr.write(f"debtdyn: {err.message}\n")
        return EXIT_INPUT_ERROR

    level = "WARNING" if args.verbose == 0 else ("INFO" if args.verbose == 1 else "DEBUG")
    settings = CliSettings(LOG_LEVEL=level, LOG_FORMAT=args.log_format)
    setup_logging(settings.LOG_LEVEL, settings.LOG_FORMAT)

    try:
        document = _run(args, settings)
    except DebtDynError as err:
        logger.log_error(err, err.context())
        sys.stderr.write(f"debtdyn: {err.message}\n")
        return err.exit_code

    try:
        _write(document, args.output, stdout)
    except OSError as err:
        sys.stderr.write(f"debtdyn: cannot write output: {err.strerror}\n")
        return EXIT_INPUT_ERROR
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    return cli_main(argv)


if __name__ == "__main__":
    sys.exit(main())
