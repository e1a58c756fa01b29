"""
conegeom package - symmetric cones, their matrices, membership, lattice
points and the triangulation check.
"""

from __future__ import annotations

from .cone import (
    ConeSpec,
    GeneratorMatrix,
    check_salient,
    cone_spec,
    default_weights,
    determinant,
    facet_matrix,
    generator_columns,
    generator_gradings,
    generator_matrix,
    grading,
    lattice_index,
)
from .lattice import box_radius, count_points, in_lattice, lattice_points
from .membership import in_fundamental_domain, membership, orbit_normals
from .triangulation import (
    TriangulationReport,
    Violation,
    covering_count,
    triangulation_check,
)

__all__ = [
    "ConeSpec",
    "GeneratorMatrix",
    "TriangulationReport",
    "Violation",
    "box_radius",
    "check_salient",
    "cone_spec",
    "count_points",
    "covering_count",
    "default_weights",
    "determinant",
    "facet_matrix",
    "generator_columns",
    "generator_gradings",
    "generator_matrix",
    "grading",
    "in_fundamental_domain",
    "in_lattice",
    "lattice_index",
    "lattice_points",
    "membership",
    "orbit_normals",
    "triangulation_check",
]


def get_version() -> str:
    return "conegeom-0.1.0"
