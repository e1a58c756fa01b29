"""
monitoring package - logging and timing for symcone.

Public surface:

- get_logger(...), configure_logging(...), log_event(...)
- PerformanceTracker for phase timings
"""

from __future__ import annotations

from .performance_tracker import PerformanceTracker
from .structured_logger import configure_logging, get_logger, log_event

__all__ = [
    "configure_logging",
    "get_logger",
    "log_event",
    "PerformanceTracker",
]
