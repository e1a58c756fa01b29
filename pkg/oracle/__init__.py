"""
oracle package - brute-force ground truth: cone lattice-point series and
lecture hall partitions.
"""

from __future__ import annotations

from .cone_series import oracle_series
from .lecture_hall import (
    LecturePartition,
    ceil_div,
    enumerate_lecture_hall,
    is_lecture_hall,
    lecture_hall_trivariate,
    lecture_hall_weighted_series,
    lh_stat1,
    lh_stat2,
    weighted_degree,
)

__all__ = [
    "LecturePartition",
    "ceil_div",
    "enumerate_lecture_hall",
    "is_lecture_hall",
    "lecture_hall_trivariate",
    "lecture_hall_weighted_series",
    "lh_stat1",
    "lh_stat2",
    "oracle_series",
    "weighted_degree",
]


def get_version() -> str:
    return "oracle-0.1.0"
