import argparse
import sys
from fractions import Fraction
from typing import List

from permcensus.cli.models import FitResultModel, RecurrenceModel
from permcensus.cli.output import emit
from permcensus.core.config import Settings
from permcensus.core.recfit import fit
from permcensus.core.types import Sequence, Term


def parse_terms(text: str) -> List[Term]:
    """Comma separated integers or fractions p/q."""
    terms: List[Term] = []
    for item in text.replace(" ", "").split(","):
        if not item:
            raise ValueError(f"Empty term in {text!r}.")
        try:
            value = Fraction(item)
        except ZeroDivisionError:
            raise ValueError(f"Zero denominator in term {item!r}.") from None
        terms.append(value.numerator if value.denominator == 1 else value)
    return terms


def register(subparsers: argparse._SubParsersAction, parents: List[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "fit",
        parents=parents,
        help="Recover a linear recurrence with polynomial coefficients.",
        description=(
            "Searches orders 1..MAX_ORDER, then degrees 0..MAX_DEGREE, for a "
            "recurrence annihilating every given term. Exit code 1 if none exists."
        ),
    )
    parser.add_argument("terms", metavar="TERMS", help='Terms, e.g. "4,12,32,80,192,448,1024".')
    parser.add_argument("--start-index", type=int, default=0, help="Index of the first term.")
    parser.add_argument("--max-order", type=int, default=2)
    parser.add_argument("--max-degree", type=int, default=1)
    parser.add_argument("--guard", type=int, default=None, help="Extra equations (default from settings).")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    seq = Sequence.from_terms(args.start_index, parse_terms(args.terms))
    guard = settings.guard if args.guard is None else args.guard
    rec = fit(seq, args.max_order, args.max_degree, guard)
    model = FitResultModel(
        start_index=seq.start_index,
        terms=len(seq),
        found=rec is not None,
        recurrence=None if rec is None else RecurrenceModel.from_recurrence(rec),
    )
    if rec is None:
        emit(args, model, [])
        sys.stderr.write(
            f"no recurrence of order <= {args.max_order} and degree <= {args.max_degree}\n"
        )
        return 1
    emit(args, model, [rec.describe()])
    return 0
