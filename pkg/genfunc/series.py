#!/usr/bin/env python3
"""
genfunc/series.py - Exact truncated power series.

Coefficients are Python ints (arbitrary precision) stored densely for
degrees 0..truncation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Tuple

from validation.error_protocol import ExpansionError, SpecificationError


@dataclass(frozen=True)
class TruncatedSeries:
    truncation: int
    coefficients: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.truncation < 0:
            raise SpecificationError(f"truncation must be >= 0, got {self.truncation}")
        coeffs = tuple(int(c) for c in self.coefficients)
        if len(coeffs) > self.truncation + 1:
            raise SpecificationError("coefficients beyond the truncation degree")
        coeffs = coeffs + (0,) * (self.truncation + 1 - len(coeffs))
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def from_mapping(cls, truncation: int, mapping: Dict[int, int]) -> "TruncatedSeries":
        coeffs = [0] * (truncation + 1)
        for degree, value in mapping.items():
            if 0 <= degree <= truncation:
                coeffs[degree] += value
        return cls(truncation, tuple(coeffs))

    def coefficient(self, degree: int) -> int:
        if degree < 0 or degree > self.truncation:
            raise SpecificationError(f"degree {degree} outside 0..{self.truncation}")
        return self.coefficients[degree]

    def to_document(self) -> Dict[str, Any]:
        return {
            "truncation": self.truncation,
            "coefficients": [str(c) for c in self.coefficients],
        }

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_add(self, other)


def series_add(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    n = min(s.truncation, t.truncation)
    return TruncatedSeries(
        n, tuple(s.coefficients[d] + t.coefficients[d] for d in range(n + 1))
    )


def series_sum(items: Iterable[TruncatedSeries]) -> TruncatedSeries:
    items = list(items)
    if not items:
        raise SpecificationError("series_sum needs at least one series")
    total = items[0]
    for item in items[1:]:
        total = series_add(total, item)
    return total


def first_mismatch(s: TruncatedSeries, t: TruncatedSeries) -> Optional[int]:
    """Lowest degree where s and t differ (up to the smaller truncation)."""
    for d in range(min(s.truncation, t.truncation) + 1):
        if s.coefficients[d] != t.coefficients[d]:
            return d
    return None


def series_equal(s: TruncatedSeries, t: TruncatedSeries) -> bool:
    return first_mismatch(s, t) is None


def series_scale_shift(s: TruncatedSeries, scale: int = 1, shift: int = 0) -> TruncatedSeries:
    """scale * q^shift * s, truncated at the same degree; shift may be negative."""
    coeffs = [0] * (s.truncation + 1)
    for d, c in enumerate(s.coefficients):
        target = d + shift
        if 0 <= target <= s.truncation:
            coeffs[target] = scale * c
    return TruncatedSeries(s.truncation, tuple(coeffs))


def series_mul(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    n = min(s.truncation, t.truncation)
    coeffs = [0] * (n + 1)
    for i, a in enumerate(s.coefficients[: n + 1]):
        if not a:
            continue
        for j in range(n + 1 - i):
            coeffs[i + j] += a * t.coefficients[j]
    return TruncatedSeries(n, tuple(coeffs))


def geometric(exponent: int, truncation: int) -> TruncatedSeries:
    """1 / (1 - q^exponent) for exponent > 0."""
    if exponent <= 0:
        raise ExpansionError(f"geometric series needs a positive exponent, got {exponent}")
    coeffs: List[int] = [0] * (truncation + 1)
    for d in range(0, truncation + 1, exponent):
        coeffs[d] = 1
    return TruncatedSeries(truncation, tuple(coeffs))
