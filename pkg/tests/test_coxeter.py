"""
Tests for signed permutation groups, descents and statistics.
"""

from __future__ import annotations

import math

import pytest

from coxeter import (
    Kind,
    apply,
    compose,
    descent_set,
    element,
    element_stats,
    enumerate_group,
    group_order,
    identity,
    inverse,
    simple_reflection,
    stat_cobin,
    stat_comaj,
    stat_des,
    stat_maj,
)
from validation.error_protocol import DimensionError, SpecificationError
from tests.assertions import require


@pytest.mark.parametrize(
    "kind,m,expected",
    [("A", 3, 6), ("B", 2, 8), ("D", 3, 24)],
)
def test_group_sizes_examples(kind: str, m: int, expected: int) -> None:
    elements = list(enumerate_group(kind, m))
    require(len(elements) == expected, f"expected {expected} elements, got {len(elements)}")
    require(len(set(elements)) == expected, "elements must be distinct")


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_group_sizes_up_to_five(m: int) -> None:
    require(sum(1 for _ in enumerate_group("A", m)) == math.factorial(m), "|S_m|")
    require(sum(1 for _ in enumerate_group("B", m)) == 2**m * math.factorial(m), "|B_m|")
    if m >= 2:
        require(
            sum(1 for _ in enumerate_group("D", m)) == 2 ** (m - 1) * math.factorial(m),
            "|D_m|",
        )
        require(group_order("D", m) == 2 ** (m - 1) * math.factorial(m), "group_order D")


def test_enumeration_starts_with_identity_and_is_deterministic() -> None:
    for kind, m in (("A", 3), ("B", 3), ("D", 3)):
        first = next(iter(enumerate_group(kind, m)))
        require(first == identity(kind, m), f"{kind}: identity should come first")
        require(
            list(enumerate_group(kind, m)) == list(enumerate_group(kind, m)),
            "enumeration order must be reproducible",
        )


@pytest.mark.parametrize("kind,m", [("A", 0), ("B", -1), ("D", 1)])
def test_invalid_rank_rejected(kind: str, m: int) -> None:
    with pytest.raises(SpecificationError):
        list(enumerate_group(kind, m))


def test_unknown_kind_rejected() -> None:
    with pytest.raises(SpecificationError):
        Kind.parse("E")


def test_element_invariants() -> None:
    with pytest.raises(SpecificationError):
        element("A", [1, 1, 2])
    with pytest.raises(SpecificationError):
        element("A", [1, 2], [1, -1])
    with pytest.raises(SpecificationError):
        element("D", [1, 2, 3], [-1, 1, 1])


def test_descent_examples() -> None:
    require(descent_set(element("A", [2, 1, 3])).indices == (1,), "A [2,1,3] -> {1}")
    require(descent_set(element("B", [1, 2], [-1, 1])).indices == (1,), "B sign change at 1")
    require(descent_set(identity("B", 4)).indices == (), "B identity has no descents")
    require(
        descent_set(element("D", [1, 2, 3], [-1, -1, 1])).indices == (1, 2),
        "D: -eps_2 pi(2) = 2 > -1 and -1 > -2 give {1, 2}",
    )


def test_identity_has_empty_descent_set_for_every_kind() -> None:
    for kind, m in (("A", 4), ("B", 4), ("D", 4)):
        require(len(descent_set(identity(kind, m))) == 0, f"{kind} identity")


def test_kind_b_first_descent_iff_first_entry_negative() -> None:
    for g in enumerate_group("B", 3):
        require(
            (1 in descent_set(g)) == (g.signed()[0] < 0),
            f"{g}: descent at 1 must match sign of first entry",
        )


def test_b2_descent_set_distribution() -> None:
    counts: dict = {}
    for g in enumerate_group("B", 2):
        key = descent_set(g).indices
        counts[key] = counts.get(key, 0) + 1
    require(counts == {(): 1, (1,): 3, (2,): 3, (1, 2): 1}, f"got {counts}")


def test_statistics_examples() -> None:
    g = element("B", [1, 2], [-1, 1])
    require((stat_des(g), stat_maj(g), stat_comaj(g)) == (1, 0, 2), "B_2 [-1, 2]")
    require(stat_cobin(g) == 3, "cobin sums 1 + 2 for the descent at 1")

    h = element("B", [2, 1], [1, 1])
    require(descent_set(h).indices == (2,), "B_2 [2, 1] -> {2}")
    require(
        (stat_des(h), stat_maj(h), stat_comaj(h), stat_cobin(h)) == (1, 1, 1, 2),
        "B_2 [2, 1] statistics",
    )

    e = identity("B", 3)
    require(
        (stat_des(e), stat_maj(e), stat_comaj(e), stat_cobin(e)) == (0, 0, 0, 0),
        "identity statistics vanish",
    )


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_comaj_equals_m_des_minus_maj(m: int) -> None:
    for g in enumerate_group("B", m):
        require(stat_comaj(g) == m * stat_des(g) - stat_maj(g), f"{g}")


def test_statistics_reject_other_kinds() -> None:
    with pytest.raises(SpecificationError):
        stat_des(identity("A", 3))
    with pytest.raises(SpecificationError):
        element_stats(identity("D", 3))


def test_element_stats_document() -> None:
    row = element_stats(element("B", [2, 1], [1, -1])).as_dict()
    require(row["element"] == "2 -1", f"got {row['element']}")
    require(set(row) == {"element", "descents", "des", "maj", "comaj", "cobin"}, "row keys")


def test_apply_examples() -> None:
    g = element("B", [2, 1], [1, -1])
    require(apply(g, (1, 0, 5)) == (0, 1, 5), "w_2 = 1, w_1 = -0, last fixed")
    require(apply(element("A", [2, 3, 1]), (1, 2, 3)) == (3, 1, 2), "coordinate permutation")
    require(apply(identity("D", 3), (4, -2, 6, 1)) == (4, -2, 6, 1), "identity")


def test_apply_dimension_mismatch() -> None:
    with pytest.raises(DimensionError):
        apply(identity("B", 2), (1, 2))
    with pytest.raises(DimensionError):
        apply(identity("A", 2), (1, 2, 3))


def test_compose_and_inverse() -> None:
    v = (3, -1, 4, 7)
    for g in enumerate_group("D", 3):
        require(compose(g, inverse(g)) == identity("D", 3), f"{g} * g^-1")
        require(apply(inverse(g), apply(g, v)) == v, f"{g} inverse undoes action")
    g = element("B", [2, 3, 1], [1, -1, -1])
    h = element("B", [3, 1, 2], [-1, 1, -1])
    w = (5, 6, 7, 1)
    require(apply(compose(g, h), w) == apply(g, apply(h, w)), "action respects composition")


def test_simple_reflections() -> None:
    require(simple_reflection("A", 3, 2, (1, 2, 3)) == (1, 3, 2), "A swaps j, j+1")
    require(simple_reflection("B", 2, 1, (4, 5, 9)) == (-4, 5, 9), "B s_1 negates x_1")
    require(simple_reflection("B", 2, 2, (4, 5, 9)) == (5, 4, 9), "B s_2 swaps 1, 2")
    require(simple_reflection("D", 2, 1, (3, 5, 7)) == (-5, -3, 7), "D s_1 reflects in x_1 + x_2 = 0")
    with pytest.raises(SpecificationError):
        simple_reflection("A", 3, 3, (1, 2, 3))
