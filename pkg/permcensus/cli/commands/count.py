import argparse
from typing import List

from permcensus.cli.models import CountResultModel
from permcensus.cli.output import emit
from permcensus.core.config import Settings
from permcensus.core.kernels import count_occurrences
from permcensus.core.patterns import format_pattern, parse_pattern, parse_permutation


def register(subparsers: argparse._SubParsersAction, parents: List[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "count",
        parents=parents,
        help="Count occurrences of a pattern in a permutation.",
        description="Prints the exact number of occurrences of PATTERN in PERM.",
    )
    parser.add_argument("perm", metavar="PERM", help='Permutation, e.g. "2,3,1,4" or "2314".')
    parser.add_argument("pattern", metavar="PATTERN", help='Pattern, e.g. "123".')
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    perm = parse_permutation(args.perm)
    pattern = parse_pattern(args.pattern)
    total = count_occurrences(perm, pattern)
    model = CountResultModel(permutation=str(perm), pattern=format_pattern(pattern), count=total)
    emit(args, model, [str(total)])
    return 0
