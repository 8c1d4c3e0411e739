"""Application wide logger.

Library code only logs to stderr; the rotating log file in the user cache
directory is attached by the command line entry point.
"""
# Standard Library
import logging
import logging.handlers
import os
import sys

# Third Party Libraries
import appdirs

CACHE_DIR = os.path.realpath(appdirs.user_cache_dir("qhtoeplitz"))
LOG_FILENAME = os.path.join(CACHE_DIR, "qhtoeplitz.log")
LOG_MAX_BYTES = 20 * 1024 * 1024
LOG_BACKUPS = 5

# Formatters
FILE_FORMATTER = logging.Formatter("[%(levelname)s:%(asctime)s:%(module)s]: %(message)s")

SIMPLE_FORMATTER = logging.Formatter("%(asctime)s: %(message)s")

DEBUG_FORMATTER = logging.Formatter("%(levelname)-8s %(asctime)s [%(module)s.%(funcName)s:%(lineno)s]:%(message)s")

logger = logging.getLogger("qhtoeplitz")
logger.setLevel(logging.INFO)
logger.propagate = False

# Reports go to stdout, so the console log stays on stderr.
console_handler = logging.StreamHandler(stream=sys.stderr)
console_handler.setFormatter(SIMPLE_FORMATTER)
logger.addHandler(console_handler)


def attach_log_file(filename=LOG_FILENAME):
    """Also write records to a rotating file; returns the handler or None"""
    for handler in logger.handlers:
        if isinstance(handler, logging.handlers.RotatingFileHandler):
            return handler
    try:
        directory = os.path.dirname(filename)
        if directory and not os.path.isdir(directory):
            os.makedirs(directory)
        file_handler = logging.handlers.RotatingFileHandler(
            filename, maxBytes=LOG_MAX_BYTES, backupCount=LOG_BACKUPS
        )
    except OSError as ex:
        logger.warning("Can't write the log file %s: %s", filename, ex)
        return None
    file_handler.setFormatter(FILE_FORMATTER)
    logger.addHandler(file_handler)
    return file_handler


def enable_debug():
    """Switch the console output to the verbose format"""
    console_handler.setFormatter(DEBUG_FORMATTER)
    logger.setLevel(logging.DEBUG)
