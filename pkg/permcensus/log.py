"""
structlog configuration shared by the services and the command line.

Log events go to stderr; stdout carries command output only.
"""
import logging
import sys
from typing import Any, List

import structlog


def configure_logging(level: str = "WARNING", json_logs: bool = False) -> None:
    """
    Installs the structlog pipeline.

    Args:
        level: Minimum level name, e.g. "INFO".
        json_logs: Render events as JSON lines instead of console text.
    """
    numeric = logging.getLevelName(level.upper())
    if not isinstance(numeric, int):
        raise ValueError(f"Unknown log level {level!r}.")

    processors: List[Any] = [
        structlog.processors.add_log_level,
        structlog.processors.TimeStamper(fmt="iso"),
    ]
    if json_logs:
        processors.append(structlog.processors.JSONRenderer(sort_keys=True))
    else:
        processors.append(structlog.dev.ConsoleRenderer(colors=False))

    structlog.configure(
        processors=processors,
        wrapper_class=structlog.make_filtering_bound_logger(numeric),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )
