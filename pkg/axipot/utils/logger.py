"""
axipot/utils/logger.py

Logging for the package. Every axipot module logs through a child of the "axipot" logger,
which owns the only handler. Records go to stderr: stdout carries the CSV and JSON that the
command line emits.

Contains:
- get_logger(): a logger for a module name
- set_level(): change the level of every axipot logger at once
"""

import logging
import sys

from axipot.config import Config

PACKAGE_LOGGER = "axipot"


# Private functions _______________________________________________________________________________

def _formatter() -> logging.Formatter:
    return logging.Formatter(fmt=Config.LOG_FORMAT, datefmt=Config.LOG_DATE_FORMAT)


def _attach_handler(logger: logging.Logger) -> logging.Logger:
    """
    Give logger a stderr handler (once) and stop propagation to the root logger.
    Args:
        logger (logging.Logger): The logger to configure
    Returns:
        logging.Logger: The configured logger
    """
    if not logger.handlers:
        handler = logging.StreamHandler(stream=sys.stderr)
        handler.setFormatter(fmt=_formatter())
        logger.addHandler(handler)
        logger.setLevel(Config.LOG_LEVEL)
    logger.propagate = False
    return logger


# Exports _________________________________________________________________________________________

def get_logger(name: str) -> logging.Logger:
    """
    Get a logger by module name. Names under the axipot package share the package handler;
    any other name gets a handler of its own.
    Args:
        name (str): Logger name, usually __name__.
    Returns:
        logging.Logger: Configured logger instance
    """
    package = _attach_handler(logging.getLogger(name=PACKAGE_LOGGER))
    if name == PACKAGE_LOGGER:
        return package
    logger = logging.getLogger(name=name)
    if name.startswith(PACKAGE_LOGGER + "."):
        return logger
    return _attach_handler(logger)


def set_level(level: int | str) -> None:
    """Set the threshold of the package logger, e.g. from a --log-level option."""
    if isinstance(level, str):
        mapping = logging.getLevelNamesMapping()
        if level.upper() not in mapping:
            raise ValueError(f"unknown log level {level!r}")
        level = mapping[level.upper()]
    get_logger(name=PACKAGE_LOGGER).setLevel(level)
