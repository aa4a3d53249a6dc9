"""
Logging setup
Installs loguru sinks from the LOGGING_CONFIG section and routes stdlib logging into them
"""

import logging
import sys
from typing import Dict, Any, Optional

from loguru import logger


class InterceptHandler(logging.Handler):
    """Forward stdlib logging records to loguru"""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            level = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        # Find the caller outside the logging module
        frame, depth = logging.currentframe(), 2
        while frame is not None and frame.f_code.co_filename == logging.__file__:
            frame = frame.f_back
            depth += 1

        logger.opt(depth=depth, exception=record.exc_info).log(level, record.getMessage())


def configure_logging(config: Optional[Dict[str, Any]] = None, level: Optional[str] = None) -> None:
    """
    Configure loguru sinks and intercept stdlib logging

    Args:
        config: Full configuration dictionary (uses its "logging" section)
        level: Overrides the configured level (e.g. DEBUG for --verbose)
    """
    logging_config = (config or {}).get("logging", {})
    fmt = logging_config.get(
        "format", "{time:YYYY-MM-DD HH:mm:ss} | {level} | {name}:{function}:{line} | {message}"
    )
    level = level or logging_config.get("level", "WARNING")

    logger.remove()
    logger.add(sys.stderr, level=level, format=fmt)

    log_file = logging_config.get("file")
    if log_file:
        logger.add(
            log_file,
            level=level,
            format=fmt,
            rotation=logging_config.get("rotation", "1 week"),
            retention=logging_config.get("retention", "1 month"),
        )

    logging.basicConfig(handlers=[InterceptHandler()], level=0, force=True)
    logger.debug(f"Logging configured at level {level}")
