"""
Logging setup for command-line runs.
"""

import logging
import sys

from pythonjsonlogger.json import JsonFormatter


TEXT_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'
JSON_FIELDS = '%(asctime)s %(levelname)s %(name)s %(message)s'


def configure_logging(level='WARNING', fmt='json', stream=None):
    """
    Install one stderr handler on the package logger.

    Args:
        level (str or int): Logging level.
        fmt (str): 'json' for structured records, 'text' for plain lines.
        stream (file, optional): Destination, stderr by default.

    Returns:
        logging.Logger: The configured package logger.
    """
    handler = logging.StreamHandler(stream or sys.stderr)
    if fmt == 'json':
        handler.setFormatter(JsonFormatter(JSON_FIELDS))
    elif fmt == 'text':
        handler.setFormatter(logging.Formatter(TEXT_FORMAT))
    else:
        raise ValueError(f"Unsupported log format: {fmt}")

    logger = logging.getLogger('pseudoseg_census')
    for existing in list(logger.handlers):
        logger.removeHandler(existing)
    logger.addHandler(handler)
    logger.setLevel(level if isinstance(level, int) else level.upper())
    logger.propagate = False
    return logger
