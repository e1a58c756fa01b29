"""
Tests for cone specs, facet/generator matrices, membership, lattice points
and the triangulation check.
"""

from __future__ import annotations

import itertools

import pytest

from conegeom import (
    ConeSpec,
    box_radius,
    check_salient,
    cone_spec,
    count_points,
    default_weights,
    determinant,
    facet_matrix,
    generator_columns,
    generator_matrix,
    grading,
    in_fundamental_domain,
    in_lattice,
    lattice_index,
    lattice_points,
    membership,
    triangulation_check,
)
from coxeter import Kind, apply, enumerate_group
from identities.verify import ORACLE_SPECS
from validation.error_protocol import DimensionError, SaliencyError, SpecificationError
from tests.assertions import require

VALID_SPECS = [
    ("A", 2, (0, 1)),
    ("A", 3, (0, 0, 1)),
    ("A", 3, (-1, 1, 1)),
    ("A", 4, (-2, 0, 1, 2)),
    ("B", 2, (1,)),
    ("B", 3, (1, 1)),
    ("B", 3, (2, 4)),
    ("B", 4, (0, 1, 3)),
    ("D", 3, (0, 1)),
    ("D", 3, (-1, 2)),
    ("D", 4, (-1, 1, 2)),
]

TRIANGULATION_SPECS = VALID_SPECS + [spec for spec in ORACLE_SPECS if spec not in VALID_SPECS]


def _matmul(rows, columns):
    return tuple(
        tuple(sum(r[k] * col[k] for k in range(len(r))) for col in columns) for r in rows
    )


@pytest.mark.parametrize(
    "kind,n,a",
    [
        ("A", 2, (0, 0)),
        ("A", 3, (1, 0, 0)),
        ("B", 3, (2, 1)),
        ("B", 3, (0, 0)),
        ("B", 3, (-1, 2)),
        ("D", 2, (1,)),
        ("D", 3, (-2, 1)),
        ("D", 4, (0, 2, 1)),
        ("D", 3, (0, 0)),
        ("B", 1, ()),
    ],
)
def test_invalid_specs_rejected(kind: str, n: int, a) -> None:
    with pytest.raises(SpecificationError):
        cone_spec(kind, n, a)


def test_weight_length_mismatch_is_dimension_error() -> None:
    with pytest.raises(DimensionError):
        cone_spec("B", 3, (1, 2, 3))


def test_generator_matrix_examples() -> None:
    require(
        generator_columns(cone_spec("B", 3, (1, 1))) == ((1, 1, 2), (0, 1, 1), (0, 0, 1)),
        "B n=3 a=(1,1)",
    )
    require(generator_columns(cone_spec("A", 2, (0, 1))) == ((1, 0), (1, 1)), "A n=2 a=(0,1)")
    d3 = generator_matrix(cone_spec("D", 3, (0, 1)))
    require(determinant(d3) == 2, "D det 2")
    require(determinant(d3.rows()) == determinant(d3), "row form agrees")


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_determinants(n: int) -> None:
    a_a = (-1,) + (0,) * (n - 3) + (1, 1) if n >= 3 else (0, 1)
    a_b = tuple(range(1, n))
    specs = [cone_spec("A", n, a_a), cone_spec("B", n, a_b)]
    if n >= 3:
        specs.append(cone_spec("D", n, (-1,) + tuple(range(1, n - 1))))
    for spec in specs:
        det = abs(determinant(generator_matrix(spec)))
        require(det == lattice_index(spec), f"{spec.describe()}: |det| = {det}")
    if n >= 3:
        require(lattice_index(specs[-1]) == 2 ** (n - 2), "D index 2^(n-2)")


@pytest.mark.parametrize("kind,n,a", VALID_SPECS)
def test_facet_times_generator(kind: str, n: int, a) -> None:
    spec = cone_spec(kind, n, a)
    product = _matmul(facet_matrix(spec), generator_columns(spec))
    diagonal = [2] * (n - 1) + [1] if spec.kind is Kind.D else [1] * n
    expected = tuple(
        tuple(diagonal[i] if i == j else 0 for j in range(n)) for i in range(n)
    )
    require(product == expected, f"{spec.describe()}: A.B = {product}")


@pytest.mark.parametrize("kind,n,a", VALID_SPECS)
def test_generators_lie_in_cone_and_lattice(kind: str, n: int, a) -> None:
    spec = cone_spec(kind, n, a)
    for j, b in enumerate(generator_columns(spec), start=1):
        require(membership(spec, b), f"{spec.describe()}: b_{j} must lie in the cone")
        require(in_lattice(spec, b), f"{spec.describe()}: b_{j} must lie in the lattice")
        require(grading(spec, b) > 0, f"{spec.describe()}: b_{j} must have positive grading")


@pytest.mark.parametrize("kind,n,a", VALID_SPECS)
def test_fundamental_domain_points_are_members(kind: str, n: int, a) -> None:
    spec = cone_spec(kind, n, a)
    columns = generator_columns(spec)
    for coeffs in itertools.product(range(3), repeat=n):
        y = tuple(sum(c * col[i] for c, col in zip(coeffs, columns)) for i in range(n))
        require(in_fundamental_domain(spec, y), f"{y} built from generators")
        require(membership(spec, y), f"{spec.describe()}: {y} should be in the cone")


def test_membership_examples() -> None:
    b = cone_spec("B", 3, (2, 4))
    require(membership(b, (0, 0, 1)), "(0,0,1) in the cone")
    require(not membership(b, (1, 0, 1)), "4 |x_1| > x_3 excludes (1,0,1)")
    quadrant = cone_spec("A", 2, (0, 1))
    require(membership(quadrant, (3, 5)), "(3,5) in the positive quadrant")
    require(not membership(quadrant, (-1, 5)), "(-1,5) outside the positive quadrant")
    with pytest.raises(DimensionError):
        membership(b, (1, 2))


def test_membership_is_group_invariant() -> None:
    spec = cone_spec("D", 4, (-1, 1, 2))
    for x in ((1, 1, 1, 4), (3, -1, 1, 6), (2, 0, 2, 7)):
        inside = membership(spec, x)
        for g in enumerate_group("D", 3):
            require(membership(spec, apply(g, x)) == inside, f"{g} applied to {x}")


def test_lattice_and_grading() -> None:
    d_spec = cone_spec("D", 4, (0, 1, 1))
    require(in_lattice(d_spec, (1, 3, -1, 0)), "all odd")
    require(not in_lattice(d_spec, (1, 2, 1, 0)), "mixed parity")
    require(default_weights(cone_spec("A", 3, (0, 0, 1))) == (1, 1, 1), "A grading")
    require(default_weights(d_spec) == (0, 0, 0, 1), "D grading")
    require(grading(cone_spec("A", 2, (0, 1)), (2, 5)) == 7, "A total degree")


def test_count_points_cross_polytope() -> None:
    spec = cone_spec("B", 3, (1, 1))
    require([count_points(spec, d) for d in range(4)] == [1, 5, 13, 25], "2k^2 + 2k + 1")


def test_lattice_points_exact_grading() -> None:
    spec = cone_spec("A", 3, (-1, 1, 1))
    for d in range(5):
        for x in lattice_points(spec, d):
            require(sum(x) == d, f"{x} has grading {d}")
            require(membership(spec, x), f"{x} in cone")


def test_box_radius() -> None:
    require(box_radius(cone_spec("B", 3, (2, 4)), 9) == 2, "9 // 4")
    require(box_radius(cone_spec("B", 3, (2, 4)), 0) == 0, "origin only")


def test_saliency() -> None:
    require(check_salient(cone_spec("B", 3, (2, 4))) == (6, 4, 1), "B gradings")
    for a in ((1, 1), (-1, 1)):
        spec = cone_spec("D", 3, a)
        with pytest.raises(SaliencyError):
            check_salient(spec)
        with pytest.raises(SaliencyError):
            list(lattice_points(spec, 2))


def test_triangulation_examples() -> None:
    report = triangulation_check(cone_spec("B", 2, (1,)), 3)
    require(report.ok, f"violations: {report.violations}")
    require(report.points_checked == 16, f"|x_1| <= x_2 <= 3 has 16 points, got {report.points_checked}")

    report = triangulation_check(cone_spec("A", 2, (0, 1)), 2)
    require(report.ok and report.points_checked == 6, "quadrant points of degree <= 2")

    for kind, n, a in VALID_SPECS:
        origin = triangulation_check(cone_spec(kind, n, a), 0)
        require(origin.points_checked == 1 and origin.ok, f"{kind}: only the origin at bound 0")


@pytest.mark.parametrize("kind,n,a", TRIANGULATION_SPECS)
def test_triangulation_disjoint_cover(kind: str, n: int, a) -> None:
    report = triangulation_check(cone_spec(kind, n, a), 6)
    require(report.ok, f"{kind} n={n} a={a}: {report.as_dict()['violations'][:3]}")
    require(bool(report), "report is truthy when clean")


def test_cone_spec_is_hashable_and_coerces() -> None:
    spec = ConeSpec("b", 3, [2, 4])
    require(spec.kind is Kind.B and spec.a == (2, 4), "kind and weights coerced")
    require(hash(spec) == hash(cone_spec("B", 3, (2, 4))), "equal specs hash equal")
