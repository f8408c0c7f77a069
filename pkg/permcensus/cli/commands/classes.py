import argparse
import asyncio
from typing import List, Tuple

from permcensus.cli.dependencies import get_runner
from permcensus.cli.models import ClassResultModel
from permcensus.cli.output import emit
from permcensus.core.config import Settings
from permcensus.core.patterns import format_pattern, parse_pattern
from permcensus.core.types import ClassConstraint, ConstraintKind, Pattern


def _exactly(text: str) -> Tuple[Pattern, ClassConstraint]:
    pattern, sep, r = text.partition("=")
    if not sep or not r.strip().isdigit():
        raise argparse.ArgumentTypeError(f"expected PATTERN=R, got {text!r}")
    return parse_pattern(pattern), ClassConstraint.exactly(int(r))


def _avoid(text: str) -> Tuple[Pattern, ClassConstraint]:
    return parse_pattern(text), ClassConstraint.avoid()


def register(subparsers: argparse._SubParsersAction, parents: List[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "class",
        parents=parents,
        help="Count the permutations of length N meeting every constraint.",
        description="Counts a pattern class by census, e.g. --exactly 123=1 --avoid 132.",
    )
    parser.add_argument("n", metavar="N", type=int, help="Permutation length.")
    parser.add_argument(
        "--avoid", metavar="P", type=_avoid, action="append", dest="constraints",
        default=[], help="Pattern that must not occur (repeatable).",
    )
    parser.add_argument(
        "--exactly", metavar="P=R", type=_exactly, action="append", dest="constraints",
        help="Pattern that must occur exactly R times (repeatable).",
    )
    parser.set_defaults(handler=run)


def describe(pattern: Pattern, rule: ClassConstraint) -> str:
    if rule.kind is ConstraintKind.AVOID:
        return f"avoid {format_pattern(pattern)}"
    if rule.kind is ConstraintKind.EXACTLY:
        return f"exactly {rule.r} {format_pattern(pattern)}"
    return f"any {format_pattern(pattern)}"


def run(args: argparse.Namespace, settings: Settings) -> int:
    if not args.constraints:
        raise ValueError("At least one --avoid or --exactly constraint is required.")
    total = asyncio.run(get_runner(settings).count_class(args.n, args.constraints))
    model = ClassResultModel(
        n=args.n,
        constraints=[describe(p, rule) for p, rule in args.constraints],
        count=total,
    )
    emit(args, model, [str(total)])
    return 0
