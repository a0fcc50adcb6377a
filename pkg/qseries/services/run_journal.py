"""
Race-safe JSONL journal of CLI runs.

One record per command: ``{ts, command, n, precision, elapsed_ms, status}``.
Appends take an exclusive portalocker lock, reads a shared one.
"""

from __future__ import annotations

import json
import logging
from contextlib import contextmanager
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional

import portalocker

logger = logging.getLogger(__name__)


# ── lock management ──────────────────────────────────────────────────
@contextmanager
def journal_lock(path: Path, shared: bool = False) -> Iterator[Any]:
    """
    Lock the journal file.

    Args:
        shared: If True, use shared lock (for reads). If False, use exclusive lock (for writes).
    """
    flags = (portalocker.LOCK_SH if shared else portalocker.LOCK_EX) | portalocker.LOCK_NB
    path.parent.mkdir(parents=True, exist_ok=True)
    if not path.exists():
        path.touch()
    with portalocker.Lock(path, "a+", flags=flags, timeout=10, encoding="utf-8") as fh:
        yield fh


def _utc() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds").replace("+00:00", "Z")


# ── public API ───────────────────────────────────────────────────────
def record_run(
    path: Path | str,
    command: str,
    *,
    n: Optional[int],
    precision: Optional[int],
    elapsed_ms: float,
    status: str,
    extra: Dict[str, Any] | None = None,
) -> Dict[str, Any]:
    """Append one record and return it."""
    rec: Dict[str, Any] = {
        "ts": _utc(),
        "command": command,
        "n": n,
        "precision": precision,
        "elapsed_ms": round(elapsed_ms, 3),
        "status": status,
    }
    if extra:
        rec.update(extra)
    path = Path(path)
    with journal_lock(path) as fh:
        fh.seek(0, 2)
        fh.write(json.dumps(rec, separators=(",", ":")) + "\n")
        fh.flush()

    try:
        from .tracing import get_tracer
        get_tracer().add_event("journal", {"command": command, "status": status})
    except Exception as e:
        # tracing must never break journaling
        logger.debug(f"Failed to add journal trace event: {e}")
    return rec


def read_runs(path: Path | str) -> List[Dict[str, Any]]:
    """All records; unparsable lines are skipped."""
    path = Path(path)
    if not path.exists():
        return []
    runs: List[Dict[str, Any]] = []
    with journal_lock(path, shared=True) as fh:
        fh.seek(0)
        for ln in fh:
            try:
                runs.append(json.loads(ln))
            except ValueError:
                continue
    return runs


def totals(path: Path | str, command: Optional[str] = None) -> Dict[str, float]:
    """Run count, failures and summed elapsed time, optionally for one command."""
    count = failures = 0
    elapsed = 0.0
    for rec in read_runs(path):
        if command is not None and rec.get("command") != command:
            continue
        count += 1
        failures += rec.get("status") != "ok"
        elapsed += rec.get("elapsed_ms", 0.0)
    return {"runs": count, "failures": failures, "elapsed_ms": round(elapsed, 3)}
