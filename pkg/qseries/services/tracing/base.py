"""
Abstract base class for tracing implementations.
"""

from __future__ import annotations

import contextvars
from abc import ABC, abstractmethod
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, Optional


@dataclass
class TraceContext:
    """Context for one span."""
    run_id: str
    span_id: str
    name: str
    metadata: Dict[str, Any] = field(default_factory=dict)
    parent: Optional["TraceContext"] = None


class AbstractTracer(ABC):
    """Root span per CLI command, child spans per computation, events in between."""

    def __init__(self) -> None:
        self._context_var: contextvars.ContextVar[Optional[TraceContext]] = contextvars.ContextVar(
            "qseries_trace_context", default=None
        )

    @abstractmethod
    def start_root_span(self, command: str, metadata: Optional[Dict[str, Any]] = None) -> TraceContext:
        """Start a root span for one command."""

    @abstractmethod
    def start_child_span(self, name: str, kind: str, metadata: Optional[Dict[str, Any]] = None) -> TraceContext:
        """Start a child span below the current one."""

    @abstractmethod
    def end_span(self, context: TraceContext, outputs: Optional[Dict[str, Any]] = None) -> None:
        """End a span."""

    @abstractmethod
    def add_event(self, event_type: str, payload: Dict[str, Any]) -> None:
        """Add an event to the current span."""

    def get_current_context(self) -> Optional[TraceContext]:
        return self._context_var.get()

    def set_current_context(self, context: Optional[TraceContext]) -> None:
        self._context_var.set(context)

    @contextmanager
    def root_span(self, command: str, metadata: Optional[Dict[str, Any]] = None) -> Iterator[TraceContext]:
        context = self.start_root_span(command, metadata)
        try:
            yield context
        finally:
            self.end_span(context)

    @contextmanager
    def child_span(
        self, name: str, kind: str, metadata: Optional[Dict[str, Any]] = None
    ) -> Iterator[TraceContext]:
        """
        Context manager for child spans.

        Args:
            name: Name of the span
            kind: Type of computation (e.g., "KERNEL", "REPORT", "SERIES")
            metadata: Additional metadata for the span
        """
        context = self.start_child_span(name, kind, metadata)
        try:
            yield context
        finally:
            self.end_span(context)
