"""Wall-clock timing for CLI reports."""

from __future__ import annotations

import time
from dataclasses import dataclass, field


@dataclass
class Stopwatch:
    """Context manager recording elapsed seconds in `elapsed`."""

    elapsed: float = 0.0
    _started: float = field(default=0.0, repr=False)

    def __enter__(self) -> "Stopwatch":
        self._started = time.perf_counter()
        return self

    def __exit__(self, *exc_info: object) -> None:
        self.elapsed = round(time.perf_counter() - self._started, 6)


__all__ = ["Stopwatch"]
