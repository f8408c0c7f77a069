import argparse
import asyncio
from typing import List

from permcensus.cli.dependencies import get_runner
from permcensus.cli.models import CensusTableModel
from permcensus.cli.output import emit
from permcensus.core.config import Settings
from permcensus.core.patterns import parse_patterns


def register(subparsers: argparse._SubParsersAction, parents: List[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "census",
        parents=parents,
        help="Joint occurrence census of patterns over S_N.",
        description=(
            "Tabulates, for every realized vector of occurrence counts, how many "
            "permutations of length N have it. Rows are ordered by count vector."
        ),
    )
    parser.add_argument("n", metavar="N", type=int, help="Permutation length.")
    parser.add_argument(
        "patterns",
        metavar="PATTERNS",
        help='Patterns separated by commas, e.g. "123,132" (";" for comma-form patterns).',
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    patterns = parse_patterns(args.patterns)
    table = asyncio.run(get_runner(settings).census(args.n, patterns))
    model = CensusTableModel.from_table(table)
    header = " ".join(model.patterns)
    lines = [f"n={model.n} patterns={header} total={table.total}"]
    lines.extend(
        f"{' '.join(str(c) for c in row.counts)}\t{row.cardinality}" for row in model.rows
    )
    emit(args, model, lines)
    return 0
