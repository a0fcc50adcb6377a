"""
Tracing for qseries computations.

Spans and events either vanish (NoopTracer) or become structured log records
(LoggingTracer); tracing failures never break a computation.
"""

from __future__ import annotations

import logging
import os
from typing import Optional

from .base import AbstractTracer, TraceContext
from .noop import NoopTracer

# Global tracer instance
_tracer: Optional[AbstractTracer] = None


def get_tracer() -> AbstractTracer:
    """The configured tracer; TRACE_ENABLED=log|true|1|on selects LoggingTracer."""
    global _tracer

    if _tracer is None:
        backend = os.getenv("TRACE_ENABLED", "").lower()
        if backend in ("log", "logging", "true", "1", "on"):
            try:
                from .log_tracer import LoggingTracer
                _tracer = LoggingTracer()
            except Exception as e:
                logging.warning(f"Failed to initialize logging tracer: {e}")
                _tracer = NoopTracer()
        else:
            _tracer = NoopTracer()

    return _tracer


def reset_tracer() -> None:
    """Reset the global tracer instance (mainly for testing)."""
    global _tracer
    _tracer = None


__all__ = ["AbstractTracer", "NoopTracer", "TraceContext", "get_tracer", "reset_tracer"]
