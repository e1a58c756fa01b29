#!/usr/bin/env python3
"""
conegeom/triangulation.py - Lattice-point check of the disjoint cover

    C = union over sigma of sigma . C_{D(sigma)}

where x lies in sigma . C_J iff y = sigma^{-1} x satisfies every facet
inequality and s_j y != y for each j in J.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

from conegeom.cone import ConeSpec
from conegeom.lattice import lattice_points
from conegeom.membership import in_fundamental_domain
from coxeter.descents import descent_set
from coxeter.group import apply, enumerate_group, inverse, simple_reflection
from monitoring.structured_logger import get_logger, log_event
from validation.error_protocol import SpecificationError

Vector = Tuple[int, ...]

logger = get_logger("conegeom.triangulation")


@dataclass(frozen=True)
class Violation:
    point: Vector
    covering_count: int

    def as_dict(self) -> Dict[str, Any]:
        return {"point": list(self.point), "covering_count": self.covering_count}


@dataclass(frozen=True)
class TriangulationReport:
    spec: ConeSpec
    bound: int
    points_checked: int
    violations: Tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def as_dict(self) -> Dict[str, Any]:
        return {
            "spec": self.spec.as_dict(),
            "bound": self.bound,
            "points_checked": self.points_checked,
            "violations": [v.as_dict() for v in self.violations],
        }


def covering_count(spec: ConeSpec, x: Vector, pieces=None) -> int:
    """Number of group elements sigma with x in sigma . C_{D(sigma)}."""
    if pieces is None:
        pieces = _pieces(spec)
    count = 0
    for g_inv, descents in pieces:
        y = apply(g_inv, x)
        if not in_fundamental_domain(spec, y):
            continue
        if any(simple_reflection(spec.kind, spec.m, j, y) == y for j in descents):
            continue
        count += 1
    return count


def _pieces(spec: ConeSpec) -> List[Tuple[Any, Tuple[int, ...]]]:
    return [
        (inverse(g), descent_set(g).indices)
        for g in enumerate_group(spec.kind, spec.m)
    ]


def triangulation_check(spec: ConeSpec, bound: int) -> TriangulationReport:
    """Check every lattice point of grading <= bound is covered exactly once."""
    if bound < 0:
        raise SpecificationError(f"bound must be nonnegative, got {bound}")
    pieces = _pieces(spec)
    checked = 0
    violations: List[Violation] = []
    for d in range(bound + 1):
        for x in lattice_points(spec, d):
            checked += 1
            count = covering_count(spec, x, pieces)
            if count != 1:
                violations.append(Violation(x, count))
    report = TriangulationReport(spec, bound, checked, tuple(violations))
    log_event(
        logger,
        "conegeom.triangulation.completed",
        {"spec": spec.describe(), "bound": bound, "points": checked,
         "violations": len(violations)},
    )
    return report
