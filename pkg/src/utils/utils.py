import logging
from typing import Optional

import colorlog

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logger(name: str, log_file: Optional[str] = None, level=logging.INFO):
    """
    Creates and configures a logger.

    Console output goes to stderr through colorlog; when ``log_file`` is
    given the same records are also written there with the plain format.
    Calling it twice for the same name does not stack handlers.

    Args:
        name (str): Logger name.
        log_file (str): Optional file to log to.
        level: Logging level (int or name such as "DEBUG").
    """
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())

    logger = logging.getLogger(name)
    logger.setLevel(level)

    if not getattr(logger, "_witt_smooth_configured", False):
        console = colorlog.StreamHandler()
        console.setFormatter(colorlog.ColoredFormatter("%(log_color)s" + LOG_FORMAT))
        logger.addHandler(console)
        logger._witt_smooth_configured = True

    if log_file and not any(
        isinstance(h, logging.FileHandler) and h.baseFilename.endswith(log_file)
        for h in logger.handlers
    ):
        handler = logging.FileHandler(log_file)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)

    return logger
