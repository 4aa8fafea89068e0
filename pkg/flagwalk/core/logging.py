"""Logging configuration."""

import logging
import sys

from flagwalk.config import settings


def setup_logging(level: str | None = None) -> None:
    """
    Configure application logging.

    Log records go to stderr so that stdout carries only mapfiles and reports.

    Args:
        level: Explicit level name, overriding the settings
    """
    if level is not None:
        log_level = logging.getLevelName(level.upper())
    elif settings.DEBUG:
        log_level = logging.DEBUG
    else:
        log_level = logging.getLevelName(settings.LOG_LEVEL.upper())

    if not isinstance(log_level, int):
        log_level = logging.WARNING

    logging.basicConfig(
        level=log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger instance.

    Args:
        name: Logger name

    Returns:
        Logger instance
    """
    return logging.getLogger(name)
