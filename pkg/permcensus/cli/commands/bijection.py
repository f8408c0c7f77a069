import argparse
from typing import List

import structlog

from permcensus.cli.models import BijectionMapModel, BijectionReportModel, BijectionRunModel
from permcensus.cli.output import emit
from permcensus.core.bijection import phi, phi_inverse, verify_bijection
from permcensus.core.census import check_budget
from permcensus.core.config import Settings
from permcensus.core.patterns import parse_permutation

logger = structlog.get_logger(__name__)


def register(subparsers: argparse._SubParsersAction, parents: List[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "bijection",
        parents=parents,
        help="Apply or verify the map between the one-123 and one-132 classes.",
    )
    actions = parser.add_subparsers(dest="action", metavar="ACTION", required=True)

    map_parser = actions.add_parser(
        "map",
        parents=parents,
        help="Image of PERM (in S) under phi, or of PERM (in T) under phi inverse.",
    )
    map_parser.add_argument("perm", metavar="PERM")
    map_parser.add_argument("--inverse", action="store_true", help="Apply phi inverse.")
    map_parser.set_defaults(handler=run_map)

    verify_parser = actions.add_parser(
        "verify",
        parents=parents,
        help="Exhaustively check phi for lengths N_MIN..N.",
    )
    verify_parser.add_argument("n", metavar="N", type=int)
    verify_parser.add_argument("--n-min", type=int, default=None, help="Smallest length (default N).")
    verify_parser.set_defaults(handler=run_verify)


def run_map(args: argparse.Namespace, settings: Settings) -> int:
    perm = parse_permutation(args.perm)
    image = phi_inverse(perm) if args.inverse else phi(perm)
    model = BijectionMapModel(
        direction="inverse" if args.inverse else "forward",
        source=str(perm),
        image=str(image),
    )
    emit(args, model, [str(image)])
    return 0


def run_verify(args: argparse.Namespace, settings: Settings) -> int:
    n_min = args.n if args.n_min is None else args.n_min
    if n_min > args.n or n_min < 0:
        raise ValueError(f"Need 0 <= --n-min <= N, got {n_min} and {args.n}.")
    check_budget(args.n, settings.census_budget)
    reports = [
        BijectionReportModel.from_report(verify_bijection(n, settings.block_size))
        for n in range(n_min, args.n + 1)
    ]
    lines = []
    for report in reports:
        verdict = "PASS" if report.passed else "FAIL"
        lines.append(
            f"n={report.n} |S|={report.size_s} |T|={report.size_t} "
            f"expected={report.expected} failures={len(report.failures)} {verdict}"
        )
        lines.extend(
            f"  {f.permutation or '-'}: {f.reason}" for f in report.failures
        )
    model = reports[0] if len(reports) == 1 else BijectionRunModel(reports=reports)
    emit(args, model, lines)
    passed = all(report.passed for report in reports)
    logger.info("bijection.verify.done", n_min=n_min, n_max=args.n, passed=passed)
    return 0 if passed else 1
