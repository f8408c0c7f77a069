"""
Rendering of command results to stdout: human text, JSON or CSV.
"""
import argparse
import csv
import json
import sys
from typing import Iterable, Optional, TextIO

from permcensus.cli.models import OutputModel, dump


def emit(
    args: argparse.Namespace,
    model: OutputModel,
    human: Iterable[str],
    stream: Optional[TextIO] = None,
) -> None:
    stream = stream or sys.stdout
    if args.json:
        stream.write(json.dumps(dump(model), separators=(",", ":")) + "\n")
    elif args.csv:
        header, rows = model.csv_table()
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    else:
        for line in human:
            stream.write(line + "\n")
