#!/usr/bin/env python3
"""
monitoring/performance_tracker.py - Wall-clock timing for expansion and
verification phases.

Each finished phase is logged as a ``phase_timing`` event. Timings never
reach stdout, so emitted documents stay byte-identical between runs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from monitoring.structured_logger import get_logger, log_event


@dataclass
class PhaseRecord:
    """Durations observed for one phase label."""

    label: str
    durations: List[float] = field(default_factory=list)
    failures: int = 0

    @property
    def runs(self) -> int:
        return len(self.durations)

    @property
    def total(self) -> float:
        return sum(self.durations)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "runs": self.runs,
            "total_sec": round(self.total, 6),
            "slowest_sec": round(max(self.durations, default=0.0), 6),
            "failures": self.failures,
        }


class PerformanceTracker:
    """
    Collect timings keyed by phase label, e.g. ``genfunc.expand`` or
    ``oracle.series``.

        tracker = PerformanceTracker()
        with tracker.track("genfunc.expand", kind="B", n=3):
            ...
    """

    def __init__(self) -> None:
        self._records: Dict[str, PhaseRecord] = {}
        self._logger = get_logger("performance")

    def track(self, label: str, **context: Any) -> "_Timer":
        return _Timer(self, label, context)

    def _finish(
        self, label: str, seconds: float, ok: bool, context: Dict[str, Any]
    ) -> None:
        record = self._records.setdefault(label, PhaseRecord(label))
        record.durations.append(seconds)
        if not ok:
            record.failures += 1
        payload = {"label": label, "duration_sec": round(seconds, 6), "ok": ok}
        payload.update(context)
        log_event(self._logger, "phase_timing", payload)

    def snapshot(self) -> Dict[str, Dict[str, Any]]:
        return {label: rec.as_dict() for label, rec in self._records.items()}


class _Timer:
    def __init__(
        self, tracker: PerformanceTracker, label: str, context: Dict[str, Any]
    ) -> None:
        self._tracker = tracker
        self._label = label
        self._context = context
        self._start: Optional[float] = None

    def __enter__(self) -> "_Timer":
        self._start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, exc_tb) -> None:
        elapsed = time.perf_counter() - (self._start or time.perf_counter())
        # pylint: disable=protected-access
        self._tracker._finish(self._label, elapsed, exc is None, self._context)
