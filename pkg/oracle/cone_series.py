#!/usr/bin/env python3
"""
oracle/cone_series.py - Cone series by direct lattice-point counting.

The coefficient of degree d is the number of lattice points x of the cone
with grading d, found by enumerating a bounding box and testing membership
against every group element. This path shares no code with genfunc.
"""

from __future__ import annotations

from typing import Optional, Sequence

from conegeom.cone import ConeSpec, default_weights
from conegeom.lattice import count_points
from genfunc.parallel import run_chunks
from genfunc.series import TruncatedSeries
from monitoring.performance_tracker import PerformanceTracker
from monitoring.structured_logger import get_logger, log_event
from validation.error_protocol import SpecificationError

logger = get_logger("oracle.cone_series")
tracker = PerformanceTracker()


def oracle_series(
    spec: ConeSpec,
    weights: Optional[Sequence[int]],
    truncation: int,
    workers: int = 1,
    executor: str = "thread",
) -> TruncatedSeries:
    """
    Count lattice points per grading degree up to `truncation`.

    weights must be the default grading of the kind (None selects it);
    other weightings do not bound the enumeration.
    """
    expected = default_weights(spec)
    if weights is not None and tuple(weights) != expected:
        raise SpecificationError(
            f"oracle enumeration needs the default grading {expected}, got {tuple(weights)}"
        )
    if truncation < 0:
        raise SpecificationError(f"truncation must be >= 0, got {truncation}")
    with tracker.track("oracle.series", spec=spec.describe(), truncation=truncation):
        counts = run_chunks(
            count_points,
            [(spec, d) for d in range(truncation + 1)],
            workers,
            executor,
        )
    series = TruncatedSeries(truncation, tuple(counts))
    log_event(
        logger,
        "oracle.series.completed",
        {"spec": spec.describe(), "truncation": truncation, "points": sum(counts)},
    )
    return series
