"""Minor finder logger initialisation"""

import logging
from logging.handlers import RotatingFileHandler

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s %(message)s"


def get_logger(module: str, level: str = "WARNING") -> logging.Logger:
    """Returns the named app logger, creating it on first use.

    Args:
        module (str): The logger name
        level (str, optional): The initial log level. Defaults to "WARNING".

    Returns:
        logging.Logger: The logger
    """
    logger = logging.getLogger(module)
    if not logger.handlers:
        logger.addHandler(logging.NullHandler())
        logger.setLevel(level)

    return logger


def set_log_level(level: str) -> None:
    minor_logger.setLevel(level.upper())


def add_file_handler(
    path: str, file_count: int = 50, max_size: int = 100_000
) -> RotatingFileHandler:
    """Attach a size-rotating file handler to the app logger.

    Args:
        path (str): The log file path
        file_count (int, optional): Rotated backups to keep. Defaults to 50.
        max_size (int, optional): Bytes per file before rotating. Defaults to 100_000.

    Returns:
        RotatingFileHandler: The attached handler
    """
    handler = RotatingFileHandler(path, maxBytes=max_size, backupCount=file_count)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    minor_logger.addHandler(handler)

    return handler


minor_logger = get_logger("minor_finder")
