#!/usr/bin/env python3
"""
Logging utilities for the vertex-ramsey toolkit.

Console output goes to stderr: stdout is reserved for the output document.
"""

import logging
import sys
from pathlib import Path
from typing import Optional, Union


def setup_logging(
    log_file: Optional[str] = None,
    level: Union[int, str] = logging.WARNING,
    format_string: Optional[str] = None,
) -> logging.Logger:
    """
    Setup logging to stderr and, optionally, a file.

    Args:
        log_file: Path to log file (optional)
        level: Logging level (int or name such as "INFO")
        format_string: Custom format string

    Returns:
        Configured logger
    """
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.WARNING

    log_format = format_string or "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    handlers = [logging.StreamHandler(sys.stderr)]

    if log_file:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file, encoding="utf-8"))

    logging.basicConfig(level=level, format=log_format, handlers=handlers, force=True)

    return logging.getLogger()


class LoggingMixin:
    """
    Mixin class providing per-class logging.

    Used by the search and driver classes that report progress.
    """

    @property
    def logger(self) -> logging.Logger:
        return logging.getLogger(f"vertex_ramsey.{self.__class__.__name__}")

    def log(self, message: str, level: str = "info") -> None:
        """
        Log a message at the given level.

        Args:
            message: Message to log
            level: Log level (info, warning, error, debug)
        """
        log_method = getattr(self.logger, level.lower(), self.logger.info)
        log_method(message)

    def log_info(self, message: str) -> None:
        """Log info message."""
        self.log(message, "info")

    def log_warning(self, message: str) -> None:
        """Log warning message."""
        self.log(message, "warning")

    def log_error(self, message: str) -> None:
        """Log error message."""
        self.log(message, "error")

    def log_debug(self, message: str) -> None:
        """Log debug message."""
        self.log(message, "debug")
