"""
Tracer that writes spans and events as structured log records.
"""

from __future__ import annotations

import logging
import time
import uuid
from typing import Any, Dict, Optional

from .base import AbstractTracer, TraceContext

logger = logging.getLogger("qseries.trace")


class LoggingTracer(AbstractTracer):
    """Span start/end and events go to the ``qseries.trace`` logger at INFO."""

    def __init__(self) -> None:
        super().__init__()
        self._started: Dict[str, float] = {}

    def _emit(self, message: str, **fields: Any) -> None:
        try:
            logger.info("%s %s", message, fields, extra={"trace": fields})
        except Exception as exc:  # pragma: no cover
            logging.debug(f"trace emit failed: {exc}")

    def start_root_span(self, command: str, metadata: Optional[Dict[str, Any]] = None) -> TraceContext:
        context = TraceContext(
            run_id=uuid.uuid4().hex[:12],
            span_id=uuid.uuid4().hex[:8],
            name=command,
            metadata=metadata or {},
        )
        self._started[context.span_id] = time.perf_counter()
        self.set_current_context(context)
        self._emit("span start", run=context.run_id, span=command, **context.metadata)
        return context

    def start_child_span(self, name: str, kind: str, metadata: Optional[Dict[str, Any]] = None) -> TraceContext:
        parent = self.get_current_context()
        context = TraceContext(
            run_id=parent.run_id if parent else uuid.uuid4().hex[:12],
            span_id=uuid.uuid4().hex[:8],
            name=name,
            metadata={"kind": kind, **(metadata or {})},
            parent=parent,
        )
        self._started[context.span_id] = time.perf_counter()
        self.set_current_context(context)
        self._emit("span start", run=context.run_id, span=name, **context.metadata)
        return context

    def end_span(self, context: TraceContext, outputs: Optional[Dict[str, Any]] = None) -> None:
        started = self._started.pop(context.span_id, None)
        elapsed = None if started is None else round((time.perf_counter() - started) * 1000, 3)
        self._emit("span end", run=context.run_id, span=context.name, elapsed_ms=elapsed, **(outputs or {}))
        self.set_current_context(context.parent)

    def add_event(self, event_type: str, payload: Dict[str, Any]) -> None:
        context = self.get_current_context()
        self._emit(
            f"event {event_type}",
            run=context.run_id if context else None,
            span=context.name if context else None,
            **payload,
        )
