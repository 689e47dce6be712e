"""
    CLI Command Module

    Description:
    - This module contains the argparse entry point of the ballvolume
    command.
    - stdout carries data only; messages go to stderr.
    - Exit codes: 0 success, 1 evaluation error or failed suite, 2 invalid
    arguments.

"""

# Importing Python Packages
import argparse
import logging
import sys
from pydantic import ValidationError

# Importing FastAPI Packages

# Importing Project Files
from apps.verify.configuration import Suite
from core.exceptions import (
    CoefficientError,
    ComposabilityError,
    ConvergenceError,
    DomainError,
    GammaOverflowError,
    GammaUnderflowError,
)
from core.logger import configure_logging
from .configuration import (
    EvalTarget,
    FormatKind,
    TableTarget,
    cli_configuration,
)
from .response_message import cli_response_message
from .schema import EvalRequest, OutputFormat, TableRequest
from .view import cli_view


command_logger = logging.getLogger(__name__)


# -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    """
    Build Parser

    Description:
    - This function is used to build the parser with the eval, table and
    verify subcommands; flags are long-form only.

    Return:
    - **parser** (ArgumentParser): Command parser.

    """

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=[kind.value for kind in FormatKind],
        default=FormatKind.JSON.value,
    )
    common.add_argument(
        "--precision", type=int, default=cli_configuration.DEFAULT_PRECISION
    )
    common.add_argument(
        "--verbose",
        action="store_true",
        help=cli_response_message.VERBOSE_HELP,
    )

    parser = argparse.ArgumentParser(
        prog=cli_configuration.PROGRAM_NAME,
        description=cli_response_message.DESCRIPTION,
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    eval_parser = subparsers.add_parser(
        "eval", parents=[common], help=cli_response_message.EVAL_HELP
    )
    eval_parser.add_argument(
        "target", choices=[target.value for target in EvalTarget]
    )
    eval_parser.add_argument("--x", type=float, required=True)
    eval_parser.add_argument("--r", type=float)
    eval_parser.add_argument("--b", type=float)

    table_parser = subparsers.add_parser(
        "table", parents=[common], help=cli_response_message.TABLE_HELP
    )
    table_parser.add_argument(
        "target", choices=[target.value for target in TableTarget]
    )
    table_parser.add_argument("--x-start", type=float, required=True)
    table_parser.add_argument("--x-end", type=float, required=True)
    table_parser.add_argument("--step", type=float, required=True)
    table_parser.add_argument("--r", type=float)

    verify_parser = subparsers.add_parser(
        "verify", parents=[common], help=cli_response_message.VERIFY_HELP
    )
    verify_parser.add_argument(
        "--suite",
        choices=[suite.value for suite in Suite]
        + [cli_configuration.ALL_SUITES],
        default=cli_configuration.ALL_SUITES,
    )
    verify_parser.add_argument("--samples", type=int)
    verify_parser.add_argument("--seed", type=int, default=0)
    verify_parser.add_argument("--tol", type=float)

    return parser


def cmd_eval(arguments: argparse.Namespace, fmt: OutputFormat) -> int:
    record = cli_view.evaluate(
        EvalRequest(
            target=arguments.target,
            x=arguments.x,
            r=arguments.r,
            b=arguments.b,
        )
    )
    sys.stdout.write(cli_view.render_eval(record, fmt))

    return cli_configuration.EXIT_SUCCESS


def cmd_table(arguments: argparse.Namespace, fmt: OutputFormat) -> int:
    request = TableRequest(
        target=arguments.target,
        x_start=arguments.x_start,
        x_end=arguments.x_end,
        step=arguments.step,
        r=arguments.r,
    )
    rows: list[dict[str, float]] = cli_view.tabulate(request)
    sys.stdout.write(cli_view.render_table(request, rows, fmt))

    return cli_configuration.EXIT_SUCCESS


def cmd_verify(arguments: argparse.Namespace, fmt: OutputFormat) -> int:
    reports = cli_view.verify(
        arguments.suite, arguments.seed, arguments.samples, arguments.tol
    )
    sys.stdout.write(cli_view.render_reports(reports, fmt))

    failed: list[str] = [
        report.suite for report in reports if not report.passed
    ]

    if failed:
        command_logger.error(
            "%s%s", cli_response_message.SUITES_FAILED, ", ".join(failed)
        )
        return cli_configuration.EXIT_FAILURE

    return cli_configuration.EXIT_SUCCESS


COMMANDS = {"eval": cmd_eval, "table": cmd_table, "verify": cmd_verify}


def main(argv: list[str] | None = None) -> int:
    """
    Main

    Description:
    - This function is used to parse arguments, run the subcommand and map
    errors to exit codes.

    Parameter:
    - **argv** (LIST): Arguments without the program name; sys.argv when
    omitted. **(Optional)**

    Return:
    - **code** (INT): Exit code.

    """

    try:
        arguments: argparse.Namespace = build_parser().parse_args(argv)

    except SystemExit as err:
        return cli_configuration.EXIT_USAGE if err.code else 0

    configure_logging("DEBUG" if arguments.verbose else None)
    command_logger.debug("Calling %s command", arguments.command)

    try:
        fmt = OutputFormat(
            format=arguments.format, precision=arguments.precision
        )
        return COMMANDS[arguments.command](arguments, fmt)

    except (
        ValidationError,
        DomainError,
        ComposabilityError,
        CoefficientError,
    ) as err:
        sys.stderr.write(f"{cli_response_message.INVALID_ARGUMENT}: {err}\n")
        return cli_configuration.EXIT_USAGE

    except (
        GammaOverflowError,
        GammaUnderflowError,
        ConvergenceError,
        ArithmeticError,
    ) as err:
        command_logger.debug("Evaluation failed", exc_info=True)
        sys.stderr.write(f"{cli_response_message.EVALUATION_ERROR}: {err}\n")
        return cli_configuration.EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
