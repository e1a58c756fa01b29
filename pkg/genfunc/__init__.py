"""
genfunc package - generating functions of symmetric cones as sums of
rational terms, their specialization and exact series expansion.
"""

from __future__ import annotations

from .builders import (
    build_closed_form,
    build_general,
    build_type_a,
    build_type_b,
    build_type_d,
)
from .expansion import expand, expand_rational, expand_window, rational_form, specialize
from .parallel import run_chunks, split_evenly
from .series import (
    TruncatedSeries,
    first_mismatch,
    geometric,
    series_add,
    series_equal,
    series_mul,
    series_scale_shift,
    series_sum,
)
from .terms import RationalSum, RationalTerm

__all__ = [
    "RationalSum",
    "RationalTerm",
    "TruncatedSeries",
    "build_closed_form",
    "build_general",
    "build_type_a",
    "build_type_b",
    "build_type_d",
    "expand",
    "expand_rational",
    "expand_window",
    "first_mismatch",
    "geometric",
    "rational_form",
    "run_chunks",
    "series_add",
    "series_equal",
    "series_mul",
    "series_scale_shift",
    "series_sum",
    "specialize",
    "split_evenly",
]


def get_version() -> str:
    return "genfunc-0.1.0"
