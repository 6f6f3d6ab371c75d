"""Logging setup shared by the CLI and the test helpers."""

import logging
import sys
from typing import Optional

from src.config.models import LoggingConfig, LogFormat


STANDARD_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DETAILED_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s"


def setup_logging(config: Optional[LoggingConfig] = None) -> None:
    """
    Configure the root logger.

    Logs always go to stderr so that command output on stdout stays
    byte-stable.
    """
    config = config or LoggingConfig()
    fmt = DETAILED_FORMAT if config.format == LogFormat.DETAILED else STANDARD_FORMAT

    logging.basicConfig(
        level=getattr(logging, config.level.value),
        format=fmt,
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )
