import argparse
import asyncio
from typing import List

from permcensus.cli.dependencies import get_runner
from permcensus.cli.models import VerificationReportModel
from permcensus.cli.output import emit
from permcensus.core.config import Settings
from permcensus.services.verification import (
    SUBCASE_NAMES,
    TARGETS,
    Oracle,
    VerificationRow,
    VerifySpec,
    run_verification,
)


def register(subparsers: argparse._SubParsersAction, parents: List[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "verify",
        parents=parents,
        help="Compare a formula against an independent oracle over a range of n.",
        description=(
            "Exit code 0 iff every value matches; for thm3-printed, iff the known "
            "divergence at n=6 (15 vs 12) is reproduced."
        ),
    )
    parser.add_argument("target", metavar="TARGET", choices=TARGETS, help=", ".join(TARGETS))
    parser.add_argument("--n-min", type=int, required=True)
    parser.add_argument("--n-max", type=int, required=True)
    parser.add_argument(
        "--oracle",
        choices=[o.value for o in Oracle],
        default=Oracle.CENSUS.value,
    )
    parser.set_defaults(handler=run)


def _row_line(row: VerificationRow) -> str:
    verdict = "ok" if row.equal else "MISMATCH"
    line = f"n={row.n} formula={row.expected} oracle={row.observed} {verdict}"
    if row.subcases is not None:
        terms = zip(SUBCASE_NAMES, row.subcases)
        line += " " + " ".join(f"{name}={term}" for name, term in terms)
    return line


def run(args: argparse.Namespace, settings: Settings) -> int:
    spec = VerifySpec(
        target=args.target,
        n_min=args.n_min,
        n_max=args.n_max,
        oracle=Oracle(args.oracle),
        budget=settings.census_budget,
    )
    report = asyncio.run(run_verification(spec, get_runner(settings), settings.block_size))
    lines = [_row_line(row) for row in report.rows]
    lines.extend(f"  {failure}" for failure in report.failures)
    lines.append(f"{report.target} vs {report.oracle}: {report.summary()}")
    emit(args, VerificationReportModel.from_report(report), lines)
    return 0 if report.passed else 1
