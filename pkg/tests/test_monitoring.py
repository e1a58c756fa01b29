"""
Structured logging and phase timing.
"""

from __future__ import annotations

from pathlib import Path

import pytest

from monitoring import PerformanceTracker, configure_logging, get_logger, log_event
from tests.assertions import require


@pytest.fixture
def log_file(tmp_path: Path):
    path = tmp_path / "logs" / "symcone.log"
    configure_logging("INFO", path)
    yield path
    configure_logging("WARNING", None)


def test_loggers_share_the_symcone_root() -> None:
    require(get_logger("oracle").name == "symcone.oracle", "prefixed")
    require(get_logger("symcone.genfunc").name == "symcone.genfunc", "not double prefixed")
    require(get_logger().propagate is False, "root does not propagate")


def test_log_event_both_call_styles(log_file: Path) -> None:
    log_event("genfunc.build.completed", {"terms": 48})
    log_event(get_logger("oracle"), "oracle.series.completed", {"truncation": 9})
    text = log_file.read_text(encoding="utf-8")
    require("EVENT: genfunc.build.completed | data={'terms': 48}" in text, text)
    require("EVENT: oracle.series.completed" in text, text)


def test_tracker_records_success_and_failure(log_file: Path) -> None:
    tracker = PerformanceTracker()
    with tracker.track("genfunc.expand", kind="B"):
        pass
    with pytest.raises(RuntimeError):
        with tracker.track("genfunc.expand"):
            raise RuntimeError("boom")
    snapshot = tracker.snapshot()["genfunc.expand"]
    require(snapshot["runs"] == 2 and snapshot["failures"] == 1, f"got {snapshot}")
    require("EVENT: phase_timing" in log_file.read_text(encoding="utf-8"), "timing logged")
