"""
Logging helpers for the laq package.

Provides a thin wrapper around the standard logging module to simplify
consistent line-by-line output across the codebase.
"""

from __future__ import annotations

import logging
from typing import Iterable, Optional, Union


class StructuredLogger:
    """
    Convenience wrapper enabling structured line-by-line logging.

    Usage:
        logger = StructuredLogger(__name__)
        logger.info_lines("Assembled blocks", ["C^{0,0}: 1", "C^{1,0}: 3"])
    """

    def __init__(self, name: str) -> None:
        self._logger = logging.getLogger(name)

    def debug(self, message: str) -> None:
        self._logger.debug(message)

    def info(self, message: str) -> None:
        self._logger.info(message)

    def warning(self, message: str) -> None:
        self._logger.warning(message)

    def info_lines(
        self,
        header: Union[str, None],
        lines: Iterable[str],
        *,
        prefix: str = "  ",
    ) -> None:
        """
        Emit a header (optional) followed by each line as an INFO log.
        """
        if not self._logger.isEnabledFor(logging.INFO):
            return
        if header:
            self.info(header)
        for line in lines:
            self.info(f"{prefix}{line}")


def configure_logging(level: Optional[str] = None) -> None:
    """Install a stderr handler at the given level name (idempotent)."""
    resolved = getattr(logging, (level or "WARNING").upper(), logging.WARNING)
    logging.basicConfig(
        level=resolved,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    logging.getLogger("laq").setLevel(resolved)


__all__ = ["StructuredLogger", "configure_logging"]
