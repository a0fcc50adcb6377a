"""
No-op tracer used when tracing is disabled.
"""

from __future__ import annotations

from typing import Any, Dict, Optional

from .base import AbstractTracer, TraceContext


class NoopTracer(AbstractTracer):
    def start_root_span(self, command: str, metadata: Optional[Dict[str, Any]] = None) -> TraceContext:
        context = TraceContext(run_id="noop", span_id="noop", name=command, metadata=metadata or {})
        self.set_current_context(context)
        return context

    def start_child_span(self, name: str, kind: str, metadata: Optional[Dict[str, Any]] = None) -> TraceContext:
        context = TraceContext(
            run_id="noop",
            span_id=f"noop_{name}",
            name=name,
            metadata=metadata or {},
            parent=self.get_current_context(),
        )
        self.set_current_context(context)
        return context

    def end_span(self, context: TraceContext, outputs: Optional[Dict[str, Any]] = None) -> None:
        self.set_current_context(context.parent)

    def add_event(self, event_type: str, payload: Dict[str, Any]) -> None:
        pass
