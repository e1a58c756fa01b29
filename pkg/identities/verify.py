#!/usr/bin/env python3
"""
identities/verify.py - Verification drivers.

Each driver computes one identity along independent routes (closed form,
generating-function expansion, lattice-point enumeration) and returns a
Verification. A Verification is truthy iff every check passed; failed
checks carry the first degree where the routes disagree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from conegeom.cone import ConeSpec, cone_spec, default_weights, grading
from conegeom.triangulation import triangulation_check
from coxeter.group import Kind
from genfunc.builders import build_closed_form, build_general
from genfunc.expansion import expand, rational_form, specialize
from genfunc.series import TruncatedSeries, first_mismatch, geometric, series_mul
from identities.closed_forms import (
    almost_constant_spec,
    chow_gessel_group_side,
    chow_gessel_side,
    comaj_closed_form,
    cross_polytope_series,
    cube_series,
    ehrhart_almost_constant,
    eqn_ps_group_side,
    eulerian_series,
    lecture_hall_spec,
)
from identities.distributions import comaj_distribution, eulerian_B, joint_distribution
from identities.qpoly import QPolynomial, evaluate_at_one, is_palindromic, poly_coefficients
from monitoring.structured_logger import get_logger, log_event
from oracle.cone_series import oracle_series
from oracle.lecture_hall import lecture_hall_trivariate, lecture_hall_weighted_series
from validation.error_protocol import SpecificationError

logger = get_logger("identities.verify")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    first_mismatch: Optional[int] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed

    def as_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "first_mismatch": self.first_mismatch,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class Verification:
    suite: str
    checks: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def __bool__(self) -> bool:
        return self.passed

    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def as_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [check.as_dict() for check in self.checks],
        }


def combine(suite: str, parts: Iterable[Verification]) -> Verification:
    checks: List[CheckResult] = []
    for part in parts:
        for check in part.checks:
            checks.append(
                CheckResult(
                    f"{part.suite}: {check.name}",
                    check.passed,
                    check.first_mismatch,
                    check.detail,
                )
            )
    return Verification(suite, tuple(checks))


def _finish(suite: str, checks: Sequence[CheckResult]) -> Verification:
    result = Verification(suite, tuple(checks))
    log_event(
        logger,
        "identities.check.completed",
        {"suite": suite, "passed": result.passed,
         "failed": [c.name for c in result.failures()]},
    )
    return result


def compare_series(name: str, left: TruncatedSeries, right: TruncatedSeries) -> CheckResult:
    degree = first_mismatch(left, right)
    if degree is None:
        return CheckResult(name, True)
    return CheckResult(
        name,
        False,
        degree,
        f"degree {degree}: {left.coefficients[degree]} != {right.coefficients[degree]}",
    )


def compare_polynomials(name: str, left: QPolynomial, right: QPolynomial) -> CheckResult:
    lc, rc = poly_coefficients(left), poly_coefficients(right)
    bad = sorted(d for d in set(lc) | set(rc) if lc.get(d, 0) != rc.get(d, 0))
    if not bad:
        return CheckResult(name, True)
    d = bad[0]
    return CheckResult(name, False, d, f"degree {d}: {lc.get(d, 0)} != {rc.get(d, 0)}")


def compare_monomials(
    name: str, left: Mapping[Tuple[int, ...], int], right: Mapping[Tuple[int, ...], int]
) -> CheckResult:
    """Compare sparse multivariate coefficients; the mismatch degree is the x-degree."""
    bad = sorted(k for k in set(left) | set(right) if left.get(k, 0) != right.get(k, 0))
    if not bad:
        return CheckResult(name, True)
    k = bad[0]
    return CheckResult(name, False, k[0], f"monomial {k}: {left.get(k, 0)} != {right.get(k, 0)}")


def _nonnegative(name: str, series: TruncatedSeries) -> CheckResult:
    for d, c in enumerate(series.coefficients):
        if c < 0:
            return CheckResult(name, False, d, f"degree {d}: coefficient {c} < 0")
    return CheckResult(name, True)


# --- cone-level checks -------------------------------------------------------


def verify_oracle(
    spec: ConeSpec, truncation: int, workers: int = 1, executor: str = "thread"
) -> Verification:
    """General construction = closed-form construction = lattice-point count."""
    weights = default_weights(spec)
    general = expand(build_general(spec), truncation, weights, workers, executor)
    closed = expand(build_closed_form(spec), truncation, weights, workers, executor)
    counted = oracle_series(spec, weights, truncation, workers, executor)
    return _finish(
        f"oracle {spec.describe()} N={truncation}",
        [
            compare_series("general = closed form", general, closed),
            compare_series("general = oracle", general, counted),
            _nonnegative("coefficients nonnegative", general),
        ],
    )


def verify_triangulation(spec: ConeSpec, bound: int) -> Verification:
    report = triangulation_check(spec, bound)
    first = grading(spec, report.violations[0].point) if report.violations else None
    detail = f"{report.points_checked} points, {len(report.violations)} violations"
    return _finish(
        f"triangulation {spec.describe()} bound={bound}",
        [CheckResult("each point covered once", report.ok, first, detail)],
    )


# --- identities --------------------------------------------------------------


def verify_eulerian_identity(m: int, truncation: int, with_oracle: bool = True) -> Verification:
    """eulerian_B(m) / (1-t)^(m+1) = sum (2k+1)^m t^k."""
    cube = cube_series(m, truncation)
    poly = eulerian_B(m)
    checks = [
        compare_series("eulerian / (1-t)^(m+1) = cube", eulerian_series(m, truncation), cube),
        CheckResult("palindromic", is_palindromic(poly, m)),
        CheckResult("value at 1 = 2^m m!", evaluate_at_one(poly) == 2**m * math.factorial(m)),
    ]
    if with_oracle:
        cube_cone = cone_spec(Kind.B, m + 1, (0,) * (m - 1) + (1,))
        checks.append(
            compare_series("cube cone oracle = cube", oracle_series(cube_cone, None, truncation), cube)
        )
    return _finish(f"eulerian m={m} N={truncation}", checks)


def verify_comaj_distribution(m: int) -> Verification:
    """sum over B_m of t^comaj = (1+t)^m [m]_t!."""
    poly = comaj_distribution(m)
    return _finish(
        f"comaj m={m}",
        [
            compare_polynomials("enumeration = (1+t)^m [m]_t!", poly, comaj_closed_form(m)),
            CheckResult(
                "value at 1 = 2^m m!", evaluate_at_one(poly) == 2**m * math.factorial(m)
            ),
        ],
    )


def verify_joint_chow_gessel(m: int, truncation: int) -> Verification:
    """
    sum over B_m of x^des q^comaj
      = prod_{i=0}^m (1 - x q^i) sum_k ([k+1]_q + q [k]_q)^m x^k  (x-degree <= N).
    """
    if truncation < m:
        raise SpecificationError(f"truncation {truncation} must be >= m = {m}")
    group = chow_gessel_group_side(m)
    closed = chow_gessel_side(m, truncation)
    by_des: Dict[int, int] = {}
    for (des, _), count in group.items():
        by_des[des] = by_des.get(des, 0) + count
    return _finish(
        f"chow-gessel m={m} N={truncation}",
        [
            compare_monomials("group side = closed side", group, closed),
            CheckResult(
                "q = 1 gives the Eulerian polynomial",
                by_des == poly_coefficients(eulerian_B(m)),
            ),
        ],
    )


def verify_almost_constant(n_minus_1: int, b: int, c: int, truncation: int) -> Verification:
    spec = almost_constant_spec(n_minus_1, b, c)
    closed = ehrhart_almost_constant(n_minus_1, b, c, truncation)
    weights = default_weights(spec)
    checks = [
        compare_series(
            "closed form = generating function",
            closed,
            expand(build_general(spec), truncation, weights),
        ),
        compare_series("closed form = oracle", closed, oracle_series(spec, weights, truncation)),
    ]
    if (b, c) == (1, 0):
        checks.append(compare_series("cube endpoint", closed, cube_series(n_minus_1, truncation)))
    if (b, c) == (0, 1):
        checks.append(
            compare_series(
                "cross-polytope endpoint", closed, cross_polytope_series(n_minus_1, truncation)
            )
        )
    return _finish(f"almost-constant n-1={n_minus_1} b={b} c={c} N={truncation}", checks)


def verify_lecture_hall_corollary(n: int, d: int, c: int, b: int, truncation: int) -> Verification:
    """
    Kind B cone with a_i = 2di + c, a_{n-1} = 2d(n-1) + c + b has
    f_C(t) = 1/(1-t) sum over L_{n-1} of t^(sum a_i ceil(lambda_i / 2i)).
    """
    spec = lecture_hall_spec(n, d, c, b)
    weights = default_weights(spec)
    rsum = build_general(spec)
    generating = expand(rsum, truncation, weights)
    partitions = series_mul(
        geometric(1, truncation), lecture_hall_weighted_series(n - 1, spec.a, truncation)
    )
    numerator, _ = rational_form(specialize(rsum, weights))
    joint = poly_coefficients(joint_distribution(n - 1, c, b, d))
    return _finish(
        f"lecture-hall n={n} d={d} c={c} b={b} N={truncation}",
        [
            compare_series("generating function = lecture hall sum", generating, partitions),
            CheckResult("numerator = joint statistic distribution", numerator == joint),
        ],
    )


def verify_eqn_ps(n: int, truncation: int) -> Verification:
    """Trivariate lecture hall identity, compared up to x-degree N."""
    if n < 1 or n > 3:
        raise SpecificationError(f"eqn-ps is checked for 1 <= n <= 3, got n={n}")
    return _finish(
        f"eqn-ps n={n} N={truncation}",
        [
            compare_monomials(
                "lecture hall side = group side",
                lecture_hall_trivariate(n, truncation),
                eqn_ps_group_side(n, truncation),
            )
        ],
    )


# --- suites ------------------------------------------------------------------

# Five weight vectors per (A|B, n) for n = 2..4 and four per (D, n) for n = 3, 4.
# A, n=2 has three salient vectors with |a_i| <= 3 and B, n=2 four with a_i <= 4,
# so those two cells reach one or two steps past the bound.
ORACLE_SPECS: Tuple[Tuple[str, int, Tuple[int, ...]], ...] = (
    ("A", 2, (0, 1)),
    ("A", 2, (-1, 2)),
    ("A", 2, (-2, 3)),
    ("A", 2, (-3, 4)),
    ("A", 2, (-4, 5)),
    ("A", 3, (0, 0, 1)),
    ("A", 3, (-1, 1, 1)),
    ("A", 3, (-1, 0, 2)),
    ("A", 3, (-2, 1, 2)),
    ("A", 3, (-3, 2, 2)),
    ("A", 4, (0, 0, 0, 1)),
    ("A", 4, (-1, 0, 1, 1)),
    ("A", 4, (-1, -1, 1, 2)),
    ("A", 4, (-2, 0, 1, 2)),
    ("A", 4, (-3, 1, 1, 2)),
    ("B", 2, (1,)),
    ("B", 2, (2,)),
    ("B", 2, (3,)),
    ("B", 2, (4,)),
    ("B", 2, (5,)),
    ("B", 3, (0, 1)),
    ("B", 3, (1, 1)),
    ("B", 3, (0, 3)),
    ("B", 3, (1, 2)),
    ("B", 3, (2, 4)),
    ("B", 4, (0, 0, 2)),
    ("B", 4, (0, 1, 2)),
    ("B", 4, (1, 1, 2)),
    ("B", 4, (0, 2, 3)),
    ("B", 4, (1, 2, 4)),
    ("D", 3, (0, 1)),
    ("D", 3, (-1, 2)),
    ("D", 3, (0, 2)),
    ("D", 3, (1, 3)),
    ("D", 4, (0, 1, 1)),
    ("D", 4, (-1, 1, 2)),
    ("D", 4, (1, 1, 2)),
    ("D", 4, (0, 1, 2)),
)

ALMOST_CONSTANT_PAIRS: Tuple[Tuple[int, int], ...] = ((0, 1), (1, 0), (1, 1), (2, 1), (1, 2))

LECTURE_HALL_CASES: Tuple[Tuple[int, int, int, int], ...] = (
    (3, 1, 0, 0),
    (2, 0, 0, 1),
    (3, 0, 1, 0),
    (3, 1, 1, 1),
)


def _oracle_specs() -> List[ConeSpec]:
    return [cone_spec(k, n, a) for k, n, a in ORACLE_SPECS]


def default_suites() -> Dict[str, Callable[[], Verification]]:
    """Each suite with the parameters `verify all` runs it with."""
    return {
        "oracle": lambda: combine(
            "oracle",
            [verify_oracle(s, 10 if s.kind is Kind.A else 12) for s in _oracle_specs()],
        ),
        "triangulation": lambda: combine(
            "triangulation", [verify_triangulation(s, 6) for s in _oracle_specs()]
        ),
        "eulerian": lambda: combine(
            "eulerian", [verify_eulerian_identity(m, 10) for m in (1, 2, 3, 4)]
        ),
        "comaj": lambda: combine("comaj", [verify_comaj_distribution(m) for m in (1, 2, 3, 4)]),
        "chow-gessel": lambda: combine(
            "chow-gessel", [verify_joint_chow_gessel(m, m + 2) for m in (1, 2, 3)]
        ),
        "almost-constant": lambda: combine(
            "almost-constant",
            [
                verify_almost_constant(k, b, c, 12)
                for k in (2, 3)
                for b, c in ALMOST_CONSTANT_PAIRS
            ],
        ),
        "lecture-hall": lambda: combine(
            "lecture-hall",
            [verify_lecture_hall_corollary(n, d, c, b, 10) for n, d, c, b in LECTURE_HALL_CASES],
        ),
        "eqn-ps": lambda: combine("eqn-ps", [verify_eqn_ps(n, 3) for n in (1, 2)]),
    }


def verify_all() -> Verification:
    return combine("all", [suite() for suite in default_suites().values()])
