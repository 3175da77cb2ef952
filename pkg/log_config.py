"""
Centralized logging configuration for critnum.

Log records go to standard error so that every command can keep standard
output for its single JSON document. The level comes from CRITNUM_LOG_LEVEL
(falling back to LOG_LEVEL) and level names are colored when stderr is a
terminal.

from log_config import get_logger
logger = get_logger(__name__)
"""

import logging
import sys

from colorama import Fore, Style, init

from settings import Settings

# Initialize colorama (required for Windows compatibility)
init()

LEVEL_COLORS = {
    logging.DEBUG: Fore.BLUE,
    logging.INFO: Fore.GREEN,
    logging.WARNING: Fore.YELLOW,
    logging.ERROR: Fore.RED,
    logging.CRITICAL: Style.BRIGHT + Fore.RED,
}

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


class ColoredFormatter(logging.Formatter):
    """Formatter that adds colors to log level names in terminal output."""

    def format(self, record):
        orig_levelname = record.levelname
        if record.levelno in LEVEL_COLORS:
            record.levelname = (
                f"{LEVEL_COLORS[record.levelno]}{record.levelname}{Style.RESET_ALL}"
            )

        result = super().format(record)

        record.levelname = orig_levelname
        return result


def resolve_level(name: str | None = None) -> int:
    """
    Map a level name to a logging level.
    :param name: Level name such as "DEBUG"; None uses Settings.CRITNUM_LOG_LEVEL
    :return: The numeric level, WARNING when the name is unknown
    """
    if name is None:
        name = Settings.CRITNUM_LOG_LEVEL
    return getattr(logging, name.upper(), logging.WARNING)


def configure(level: int | None = None) -> None:
    """Install the stderr handler on the root logger (once) and set the level."""
    root_logger = logging.getLogger()
    log_level = resolve_level() if level is None else level
    root_logger.setLevel(log_level)

    for handler in root_logger.handlers:
        if getattr(handler, "_critnum", False):
            handler.setLevel(log_level)
            return

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(log_level)
    console_handler._critnum = True

    if sys.stderr.isatty():
        formatter = ColoredFormatter(LOG_FORMAT, datefmt=DATE_FORMAT)
    else:
        formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)
    console_handler.setFormatter(formatter)

    root_logger.addHandler(console_handler)


configure()


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger with the application's settings.

    Args:
        name: The name for the logger, typically __name__

    Returns:
        A configured logger instance
    """
    return logging.getLogger(name)
