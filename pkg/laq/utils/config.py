"""
Process-wide settings for the laq engine and CLI.

Settings are read from the environment. A `.env` file at the repository root
is loaded first when python-dotenv is available; variables that are already
set are never overridden.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Optional, Tuple, Union

try:
    # Optional dependency used to load `.env` files if present.
    from dotenv import load_dotenv  # type: ignore
except Exception:  # pragma: no cover
    load_dotenv = None

_DEFAULT_ENV_FILENAME = ".env"
_LOG_LEVEL_ENV_VAR = "LAQ_LOG_LEVEL"
_WORKERS_ENV_VAR = "LAQ_WORKERS"
_WINDOW_ENV_VAR = "LAQ_DEFAULT_WINDOW"
_SEED_ENV_VAR = "LAQ_SELFTEST_SEED"

DEFAULT_WINDOW: Tuple[int, int] = (4, 4)


@dataclass(frozen=True)
class Settings:
    """Resolved configuration values."""

    log_level: str = "WARNING"
    workers: int = 1
    default_window: Tuple[int, int] = DEFAULT_WINDOW
    selftest_seed: int = 20250101


def _load_repo_dotenv(explicit_path: Optional[Union[str, Path]] = None) -> Optional[Path]:
    """
    Attempt to load environment variables from the repo's `.env`.

    Returns the path that was loaded (if any). No error is raised if dotenv is unavailable.
    """
    if load_dotenv is None:
        return None

    if explicit_path:
        dot_path = Path(explicit_path).expanduser().resolve()
    else:
        dot_path = Path(__file__).resolve().parents[2] / _DEFAULT_ENV_FILENAME
    if dot_path.is_file():
        load_dotenv(str(dot_path), override=False)
        return dot_path
    return None


def parse_window(text: str) -> Tuple[int, int]:
    """Parse a `P,Q` window string into a pair of non-negative integers."""
    parts = [part.strip() for part in str(text).split(",")]
    if len(parts) != 2 or not all(part.isdigit() for part in parts):
        raise ValueError(f"window must look like 'P,Q' with non-negative integers, got {text!r}.")
    return int(parts[0]), int(parts[1])


def _positive_int(raw: Optional[str], default: int, name: str) -> int:
    if raw is None or not raw.strip():
        return default
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{name} must be a positive integer.")
    return value


@lru_cache(maxsize=1)
def load_settings(dotenv_path: Optional[str] = None) -> Settings:
    """Build the cached `Settings` from the environment."""
    _load_repo_dotenv(dotenv_path)
    window_raw = os.getenv(_WINDOW_ENV_VAR)
    seed_raw = os.getenv(_SEED_ENV_VAR)
    return Settings(
        log_level=(os.getenv(_LOG_LEVEL_ENV_VAR) or "WARNING").upper(),
        workers=_positive_int(os.getenv(_WORKERS_ENV_VAR), 1, _WORKERS_ENV_VAR),
        default_window=parse_window(window_raw) if window_raw else DEFAULT_WINDOW,
        selftest_seed=int(seed_raw) if seed_raw else 20250101,
    )


__all__ = ["DEFAULT_WINDOW", "Settings", "load_settings", "parse_window"]
