"""
Package defaults and hard caps.

Defaults come from ``qseries/config/defaults.yaml``; environment variables
(after python-dotenv has loaded any ``.env``) override them.
"""

from __future__ import annotations

import logging
import os
from functools import lru_cache
from importlib import resources
from pathlib import Path
from types import MappingProxyType
from typing import Any, Dict, Mapping

import yaml

from .exceptions import BudgetExceeded, ConfigError

logger = logging.getLogger(__name__)

# ── locate defaults.yaml robustly ────────────────────────────────────
try:
    _CFG = resources.files("qseries.config").joinpath("defaults.yaml")
except Exception:  # zipapp or very old Python
    _CFG = Path(__file__).resolve().parent / "config" / "defaults.yaml"

_REQUIRED_KEYS = {"precision", "limits", "probe_retries", "output"}
_LIMIT_KEYS = {"max_precision", "max_variables", "max_terms"}


@lru_cache(maxsize=1)
def load_defaults() -> Mapping[str, Any]:
    """Read defaults.yaml once; the result is frozen."""
    with _CFG.open(encoding="utf-8") as fh:
        raw: Dict[str, Any] = yaml.safe_load(fh)
    if not isinstance(raw, dict):  # pragma: no cover
        raise ConfigError("defaults.yaml must be a mapping")
    missing = _REQUIRED_KEYS - raw.keys()
    if missing:
        raise ConfigError(f"defaults.yaml missing keys: {', '.join(sorted(missing))}")
    missing = _LIMIT_KEYS - raw["limits"].keys()
    if missing:
        raise ConfigError(f"defaults.yaml limits missing keys: {', '.join(sorted(missing))}")

    limits = MappingProxyType({k: int(v) for k, v in raw["limits"].items()})
    return MappingProxyType({**raw, "limits": limits})


def _env_int(name: str, fallback: int) -> int:
    value = os.getenv(name, "").strip()
    if not value:
        return fallback
    try:
        return int(value)
    except ValueError as exc:
        raise ConfigError(f"{name} must be an integer, got {value!r}") from exc


def default_precision() -> int:
    """Precision d used when neither the config nor the CLI sets one."""
    return _env_int("QSERIES_PRECISION", int(load_defaults()["precision"]))


def probe_retries() -> int:
    return int(load_defaults()["probe_retries"])


def limits() -> Mapping[str, int]:
    return load_defaults()["limits"]


def journal_path() -> Path | None:
    value = os.getenv("QSERIES_JOURNAL", "").strip()
    return Path(value) if value else None


# ── caps ─────────────────────────────────────────────────────────────
def check_precision(d: int) -> int:
    """Return *d* unchanged or raise BudgetExceeded / ConfigError."""
    if d < 1:
        raise ConfigError(f"precision must be >= 1, got {d}")
    cap = limits()["max_precision"]
    if d > cap:
        raise BudgetExceeded(f"precision {d} would exceed cap ({cap})")
    return d


def check_variables(n: int) -> int:
    cap = limits()["max_variables"]
    if n > cap:
        raise BudgetExceeded(f"{n} variables would exceed cap ({cap})")
    return n


def check_terms(count: int) -> int:
    cap = limits()["max_terms"]
    if count > cap:
        logger.debug("term cap hit: %d > %d", count, cap)
        raise BudgetExceeded(f"series with {count} terms would exceed cap ({cap})")
    return count
