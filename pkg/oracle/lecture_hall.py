#!/usr/bin/env python3
"""
oracle/lecture_hall.py - Lecture hall partitions

    L_n = { lambda in Z^n : 0 <= lambda_1/1 <= lambda_2/2 <= ... <= lambda_n/n }

and their ceiling statistics. All comparisons are integer cross-multiplied.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterator, Sequence, Tuple

from genfunc.series import TruncatedSeries
from validation.error_protocol import ExpansionError, SpecificationError


def ceil_div(p: int, q: int) -> int:
    return -(-p // q)


@dataclass(frozen=True)
class LecturePartition:
    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if not is_lecture_hall(self.parts):
            raise SpecificationError(f"{self.parts} is not a lecture hall partition")

    @property
    def n(self) -> int:
        return len(self.parts)


def is_lecture_hall(parts: Sequence[int]) -> bool:
    if not parts:
        return True
    if parts[0] < 0:
        return False
    for i in range(1, len(parts)):
        # parts[i-1] / i <= parts[i] / (i+1)
        if parts[i - 1] * (i + 1) > parts[i] * i:
            return False
    return True


def enumerate_lecture_hall(n: int, cap: int) -> Iterator[LecturePartition]:
    """Every lambda in L_n with lambda_n <= cap, in lexicographic order."""
    if n < 1:
        raise SpecificationError(f"n must be >= 1, got {n}")
    if cap < 0:
        return

    def extend(prefix: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        i = len(prefix)
        if i == n:
            yield prefix
            return
        # lambda_{i+1} ranges over [ceil((i+1) lambda_i / i), floor((i+1) cap / n)]
        low = ceil_div((i + 1) * prefix[-1], i) if prefix else 0
        high = ((i + 1) * cap) // n
        for value in range(low, high + 1):
            yield from extend(prefix + (value,))

    for parts in extend(()):
        yield LecturePartition(parts)


def lh_stat1(lam: LecturePartition) -> int:
    return sum(ceil_div(v, 2 * i) for i, v in enumerate(lam.parts, start=1))


def lh_stat2(lam: LecturePartition) -> int:
    return sum(2 * i * ceil_div(v, 2 * i) for i, v in enumerate(lam.parts, start=1))


def weighted_degree(lam: LecturePartition, a: Sequence[int]) -> int:
    return sum(w * ceil_div(v, 2 * i) for i, (w, v) in enumerate(zip(a, lam.parts), start=1))


def lecture_hall_weighted_series(n: int, a: Sequence[int], truncation: int) -> TruncatedSeries:
    """
    sum over lambda in L_n of t^(a_1 ceil(lambda_1/2) + ... + a_n ceil(lambda_n/(2n))).

    Needs a_i >= 0 and a_n > 0: with a_n = 0 the degree-0 coefficient counts
    infinitely many partitions.
    """
    a = tuple(int(x) for x in a)
    if len(a) != n:
        raise SpecificationError(f"expected {n} weights, got {len(a)}")
    if any(x < 0 for x in a):
        raise SpecificationError(f"lecture hall weights must be nonnegative, got {a}")
    if a[-1] <= 0:
        raise ExpansionError("lecture hall weighted series needs a_n > 0 to be finite")
    cap = 2 * n * (truncation // a[-1])
    coeffs = [0] * (truncation + 1)
    for lam in enumerate_lecture_hall(n, cap):
        degree = weighted_degree(lam, a)
        if degree <= truncation:
            coeffs[degree] += 1
    return TruncatedSeries(truncation, tuple(coeffs))


def lecture_hall_trivariate(n: int, max_x_degree: int) -> Dict[Tuple[int, int, int], int]:
    """
    sum over lambda in L_n of x^ceil(lambda_n/(2n)) q^stat1 y^stat2, keeping
    x-degrees <= max_x_degree. Keys are (x, q, y) degrees.
    """
    counts: Dict[Tuple[int, int, int], int] = defaultdict(int)
    for lam in enumerate_lecture_hall(n, 2 * n * max_x_degree):
        key = (ceil_div(lam.parts[-1], 2 * n), lh_stat1(lam), lh_stat2(lam))
        counts[key] += 1
    return dict(counts)
