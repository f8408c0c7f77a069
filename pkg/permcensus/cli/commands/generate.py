import argparse
from typing import List

from permcensus.cli.models import GenerateResultModel
from permcensus.cli.output import emit
from permcensus.core.config import Settings
from permcensus.core.enumeration import generate_double_avoiders, generate_single_ascent

GENERATORS = {
    "double-avoiders": generate_double_avoiders,
    "single-ascent": generate_single_ascent,
}


def register(subparsers: argparse._SubParsersAction, parents: List[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "generate",
        parents=parents,
        help="Build a class structurally, without filtering S_N.",
        description=(
            "double-avoiders: the 2^(N-1) permutations avoiding 123 and 132. "
            "single-ascent: the N-1 permutations with exactly one 12."
        ),
    )
    parser.add_argument("n", metavar="N", type=int, help="Permutation length.")
    parser.add_argument("--kind", choices=sorted(GENERATORS), default="double-avoiders")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    members = [str(p) for p in GENERATORS[args.kind](args.n)]
    model = GenerateResultModel(n=args.n, kind=args.kind, count=len(members), permutations=members)
    emit(args, model, members)
    return 0
