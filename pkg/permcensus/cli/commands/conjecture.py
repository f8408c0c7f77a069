import argparse
import asyncio
from typing import List

from permcensus.cli.dependencies import get_runner
from permcensus.cli.models import ConjectureReportModel, ConjectureRowModel
from permcensus.cli.output import emit
from permcensus.core.config import Settings


def register(subparsers: argparse._SubParsersAction, parents: List[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "conjecture",
        parents=parents,
        help="Counts of 132-avoiders with exactly r 123s, with binary decompositions.",
        description=(
            "For n = 1..N_MAX and r = 0..R_MAX, prints the number of 132-avoiding "
            "permutations with exactly r occurrences of 123 and a greedy sum of "
            "powers of two for it. Exploratory: nothing is asserted."
        ),
    )
    parser.add_argument("n_max", metavar="N_MAX", type=int)
    parser.add_argument("--r-max", type=int, default=3)
    parser.add_argument("--n-min", type=int, default=1)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    rows = asyncio.run(get_runner(settings).conjecture(args.n_max, args.r_max, args.n_min))
    model = ConjectureReportModel(
        r_max=args.r_max, rows=[ConjectureRowModel.from_row(row) for row in rows]
    )
    lines: List[str] = []
    for row in model.rows:
        if row.r == 0:
            lines.append(f"n={row.n} 132-avoiders={row.avoiders}")
        decomposition = " + ".join(row.decomposition) or "0"
        lines.append(f"n={row.n} r={row.r} count={row.count} = {decomposition}")
    emit(args, model, lines)
    return 0
