"""
identities package - q-polynomials, closed forms and the verification
drivers that compare them with generating functions and enumeration.
"""

from __future__ import annotations

from .closed_forms import (
    almost_constant_spec,
    comaj_closed_form,
    cross_polytope_series,
    cube_series,
    ehrhart_almost_constant,
    eulerian_series,
    interpolating_family,
    lecture_hall_spec,
    lecture_hall_weights,
)
from .distributions import comaj_distribution, eulerian_B, joint_distribution
from .qpoly import (
    QPolynomial,
    evaluate_at_one,
    is_palindromic,
    poly_coefficients,
    q_bracket,
    q_factorial,
)
from .verify import (
    CheckResult,
    Verification,
    combine,
    default_suites,
    verify_all,
    verify_almost_constant,
    verify_comaj_distribution,
    verify_eqn_ps,
    verify_eulerian_identity,
    verify_joint_chow_gessel,
    verify_lecture_hall_corollary,
    verify_oracle,
    verify_triangulation,
)

__all__ = [
    "CheckResult",
    "QPolynomial",
    "Verification",
    "almost_constant_spec",
    "comaj_closed_form",
    "comaj_distribution",
    "combine",
    "cross_polytope_series",
    "cube_series",
    "default_suites",
    "ehrhart_almost_constant",
    "eulerian_B",
    "eulerian_series",
    "evaluate_at_one",
    "interpolating_family",
    "is_palindromic",
    "joint_distribution",
    "lecture_hall_spec",
    "lecture_hall_weights",
    "poly_coefficients",
    "q_bracket",
    "q_factorial",
    "verify_all",
    "verify_almost_constant",
    "verify_comaj_distribution",
    "verify_eqn_ps",
    "verify_eulerian_identity",
    "verify_joint_chow_gessel",
    "verify_lecture_hall_corollary",
    "verify_oracle",
    "verify_triangulation",
]


def get_version() -> str:
    return "identities-0.1.0"
