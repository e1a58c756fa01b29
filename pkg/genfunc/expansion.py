#!/usr/bin/env python3
"""
genfunc/expansion.py - Specialization and exact series expansion of
rational sums.

Univariate terms q^p / prod (1 - q^e_k) are grouped by their denominator
multiset. Each group expands prod 1/(1 - q^e_k) once and adds one shifted
copy per numerator into a window of degrees [lo, N], lo = min(0, p_min).
Single terms may be Laurent series (p < 0); only the total is a power
series, so every negative-degree coefficient of the total must vanish.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Dict, List, Optional, Sequence, Tuple

from genfunc.parallel import run_chunks, split_evenly
from genfunc.series import TruncatedSeries
from genfunc.terms import RationalSum, RationalTerm, Vector
from monitoring.performance_tracker import PerformanceTracker
from monitoring.structured_logger import get_logger, log_event
from validation.error_protocol import DimensionError, ExpansionError, SpecificationError

logger = get_logger("genfunc.expansion")
tracker = PerformanceTracker()

Group = Tuple[Tuple[int, ...], Tuple[int, ...]]


def _dot(w: Sequence[int], v: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(w, v))


def specialize(rsum: RationalSum, weights: Sequence[int]) -> RationalSum:
    """Replace every exponent vector v by the 1-vector (<weights, v>)."""
    weights = tuple(int(w) for w in weights)
    if len(weights) != rsum.dimension:
        raise DimensionError(
            f"weights have length {len(weights)}, the sum has dimension {rsum.dimension}"
        )
    terms = []
    for index, term in enumerate(rsum.terms):
        dens = tuple((_dot(weights, d),) for d in term.denominators)
        if any(d == (0,) for d in dens):
            raise ExpansionError(
                f"term {index}: a denominator specializes to exponent 0 under weights {weights}"
            )
        terms.append(RationalTerm((_dot(weights, term.numerator),), dens))
    return RationalSum(1, tuple(terms))


def _groups(rsum: RationalSum) -> List[Group]:
    """(sorted denominator exponents, numerator degrees) per denominator multiset."""
    buckets: Dict[Tuple[int, ...], List[int]] = defaultdict(list)
    for index, term in enumerate(rsum.terms):
        exps = tuple(sorted(d[0] for d in term.denominators))
        if exps[0] <= 0:
            raise ExpansionError(
                f"term {index}: denominator exponent {exps[0]} is not positive"
            )
        buckets[exps].append(term.numerator[0])
    return [(exps, tuple(nums)) for exps, nums in sorted(buckets.items())]


def _expand_groups(groups: Sequence[Group], lo: int, truncation: int) -> List[int]:
    """Window coefficients for degrees lo..truncation contributed by groups."""
    window = [0] * (truncation - lo + 1)
    for exps, numerators in groups:
        reach = truncation - min(numerators)
        if reach < 0:
            continue
        product = [0] * (reach + 1)
        product[0] = 1
        for e in exps:
            for k in range(e, reach + 1):
                product[k] += product[k - e]
        for p in numerators:
            for k in range(0, truncation - p + 1):
                window[p + k - lo] += product[k]
    return window


def _lowest_degree(rsum: RationalSum) -> int:
    return min([0] + [t.numerator[0] for t in rsum.terms])


def _univariate(rsum: RationalSum, grading: Optional[Sequence[int]]) -> RationalSum:
    if grading is not None:
        return specialize(rsum, grading)
    if rsum.dimension != 1:
        raise SpecificationError(
            "multivariate sums need a grading to collapse onto before expansion"
        )
    return rsum


def expand_window(
    rsum: RationalSum,
    truncation: int,
    grading: Optional[Sequence[int]] = None,
    workers: int = 1,
    executor: str = "thread",
) -> Tuple[int, List[int]]:
    """
    Return (lo, coefficients of degrees lo..truncation) before any
    cancellation check.
    """
    if truncation < 0:
        raise SpecificationError(f"truncation must be >= 0, got {truncation}")
    usum = _univariate(rsum, grading)
    groups = _groups(usum)
    lo = _lowest_degree(usum)
    chunks = split_evenly(groups, workers)
    partials = run_chunks(
        _expand_groups, [(chunk, lo, truncation) for chunk in chunks], workers, executor
    )
    window = [0] * (truncation - lo + 1)
    for part in partials:
        for i, c in enumerate(part):
            window[i] += c
    return lo, window


def expand(
    rsum: RationalSum,
    truncation: int,
    grading: Optional[Sequence[int]] = None,
    workers: int = 1,
    executor: str = "thread",
) -> TruncatedSeries:
    with tracker.track("genfunc.expand", terms=len(rsum), truncation=truncation):
        lo, window = expand_window(rsum, truncation, grading, workers, executor)
    for degree in range(lo, 0):
        residue = window[degree - lo]
        if residue:
            raise ExpansionError(
                f"coefficient {residue} left at negative degree {degree}; "
                "the sum is not a power series"
            )
    series = TruncatedSeries(truncation, tuple(window[-lo:]))
    log_event(
        logger,
        "genfunc.expand.completed",
        {"terms": len(rsum), "truncation": truncation, "window_low": lo,
         "workers": workers},
    )
    return series


def rational_form(rsum: RationalSum) -> Tuple[Dict[int, int], Tuple[int, ...]]:
    """
    Collapse a univariate sum whose terms share one denominator multiset into
    (numerator polynomial as degree -> coefficient, denominator exponents).
    """
    usum = _univariate(rsum, None)
    groups = _groups(usum)
    if len(groups) != 1:
        raise ExpansionError(
            f"terms use {len(groups)} distinct denominators; no common form without cancellation"
        )
    exps, numerators = groups[0]
    numerator: Dict[int, int] = defaultdict(int)
    for p in numerators:
        numerator[p] += 1
    return dict(sorted(numerator.items())), exps


def expand_rational(
    numerator: Dict[int, int], exponents: Sequence[int], truncation: int
) -> TruncatedSeries:
    """Expand sum_p c_p q^p / prod (1 - q^e) for a nonnegative numerator."""
    terms = []
    for p, count in numerator.items():
        if p < 0:
            raise ExpansionError("numerator degrees must be nonnegative")
        terms.extend([RationalTerm((p,), tuple((e,) for e in exponents))] * count)
    return expand(RationalSum(1, tuple(terms)), truncation)
