from permcensus.cli.commands import (
    bijection,
    census,
    classes,
    conjecture,
    count,
    fit,
    generate,
    verify,
)

COMMANDS = (count, census, classes, generate, bijection, verify, fit, conjecture)
