from permcensus.cli.main import run

run()
