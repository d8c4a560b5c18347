"""
CANREL Logging
Rich console logging on stderr; stdout is reserved for documents.
"""

import logging
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler

from canrel.core import settings

_configured = False


def setup_logging(level: Optional[str] = None) -> None:
    """Install a single RichHandler on the package logger."""
    global _configured

    logger = logging.getLogger("canrel")
    logger.setLevel((level or settings.log_level).upper())

    if _configured:
        return

    handler = RichHandler(
        console=Console(stderr=True),
        show_path=settings.debug,
        rich_tracebacks=settings.debug,
    )
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    logger.addHandler(handler)
    logger.propagate = False
    _configured = True
