"""
Logger

Centralized logging for entropic_bell computations and scans.
"""

import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import Optional

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logger(
    name: str = "entropic_bell",
    log_dir: Optional[Path] = None,
    verbose: bool = False,
) -> logging.Logger:
    """
    Set up the package logger.

    Nothing is written anywhere unless asked for: without a log directory or
    the verbose flag the logger only carries a NullHandler.

    Args:
        name: Logger name
        log_dir: Directory for dated log files. No file is written when None.
        verbose: Also log to stderr

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)
    logger.setLevel(logging.INFO)

    formatter = logging.Formatter(LOG_FORMAT)
    kinds = {type(h) for h in logger.handlers}

    if log_dir is not None and logging.FileHandler not in kinds:
        log_dir.mkdir(parents=True, exist_ok=True)
        log_file = log_dir / f"entropic-bell-{datetime.now().strftime('%Y%m%d')}.log"

        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(logging.INFO)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    if verbose and logging.StreamHandler not in kinds:
        stream_handler = logging.StreamHandler(sys.stderr)
        stream_handler.setLevel(logging.INFO)
        stream_handler.setFormatter(formatter)
        logger.addHandler(stream_handler)

    if not logger.handlers:
        logger.addHandler(logging.NullHandler())

    return logger
