"""
The permcensus command line.

Exit codes: 0 success, 1 verification mismatch or no recurrence found,
2 usage, input or internal error.
"""
import argparse
import sys
from typing import List, Optional, Sequence

import structlog
from pydantic import ValidationError

from permcensus import __version__
from permcensus.cli.commands import COMMANDS
from permcensus.cli.dependencies import get_settings
from permcensus.core.config import DEFAULT_CENSUS_BUDGET
from permcensus.core.errors import InternalError, PermCensusError
from permcensus.log import configure_logging

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

logger = structlog.get_logger(__name__)


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    """
    Flags accepted both before and after the subcommand. The copy attached
    to subcommands uses SUPPRESS defaults so it never masks a value given
    before the subcommand.
    """
    def default(value: object) -> object:
        return argparse.SUPPRESS if suppress else value

    parser = argparse.ArgumentParser(add_help=False)
    output = parser.add_mutually_exclusive_group()
    output.add_argument("--json", action="store_true", default=default(False),
                        help="Emit JSON on stdout.")
    output.add_argument("--csv", action="store_true", default=default(False),
                        help="Emit CSV on stdout.")
    parser.add_argument("--jobs", type=int, default=default(None),
                        help="Census shards run in parallel (default 1, serial).")
    parser.add_argument("--budget", type=int, default=default(None),
                        help="Largest n accepted for a census (default 11).")
    parser.add_argument("--log-level", default=default(None),
                        help="DEBUG, INFO, WARNING (default) or ERROR; logs go to stderr.")
    return parser


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permcensus",
        description="Pattern censuses of permutations, 123/132 class formulas and recurrence fitting.",
        parents=[_global_flags(suppress=False)],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    parents = [_global_flags(suppress=True)]
    for command in COMMANDS:
        command.register(subparsers, parents)
    return parser


def _message(exc: Exception) -> str:
    if isinstance(exc, ValidationError):
        return "; ".join(str(error["msg"]) for error in exc.errors())
    return str(exc)


def _fail(code: int, exc: Exception) -> int:
    sys.stderr.write(f"permcensus: error: {_message(exc)}\n")
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code is None:
            return EXIT_OK
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    if args.json and args.csv:
        return _fail(EXIT_USAGE, ValueError("--json and --csv are mutually exclusive."))

    try:
        settings = get_settings().with_overrides(
            jobs=args.jobs, census_budget=args.budget, log_level=args.log_level
        )
    except ValidationError as exc:
        return _fail(EXIT_USAGE, exc)
    configure_logging(settings.log_level, settings.json_logs)
    if settings.census_budget != DEFAULT_CENSUS_BUDGET:
        logger.warning("budget.override", budget=settings.census_budget,
                       default=DEFAULT_CENSUS_BUDGET)
    logger.debug("command.start", command=args.command, jobs=settings.jobs,
                 budget=settings.census_budget)

    try:
        return int(args.handler(args, settings))
    except InternalError as exc:
        logger.error("command.internal_error", command=args.command, error=str(exc))
        return _fail(EXIT_USAGE, exc)
    except (PermCensusError, ValueError) as exc:
        return _fail(EXIT_USAGE, exc)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
