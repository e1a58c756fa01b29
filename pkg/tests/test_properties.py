"""
Property-based checks for the group action, membership and series arithmetic.
"""

from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from conegeom import cone_spec, membership
from coxeter import apply, compose, enumerate_group, identity, inverse
from genfunc import TruncatedSeries, series_add, series_mul
from tests.assertions import require

B3 = list(enumerate_group("B", 3))
D3 = list(enumerate_group("D", 3))
B2 = list(enumerate_group("B", 2))
SPEC = cone_spec("B", 4, (0, 1, 1))
SPEC_SMALL = cone_spec("B", 3, (1, 1))
SPEC_D = cone_spec("D", 4, (-1, 1, 2))

vectors3 = st.lists(st.integers(-6, 6), min_size=3, max_size=3)
vectors4 = st.lists(st.integers(-6, 6), min_size=4, max_size=4)
series = st.lists(st.integers(-50, 50), min_size=6, max_size=6).map(
    lambda c: TruncatedSeries(5, tuple(c))
)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(B3), st.sampled_from(B3), vectors4)
def test_action_is_compatible_with_composition(g, h, v) -> None:
    require(apply(compose(g, h), v) == apply(g, apply(h, v)), f"{g} {h} {v}")


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(D3))
def test_inverse(g) -> None:
    require(compose(g, inverse(g)) == identity("D", 3), str(g))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(B3), vectors4)
def test_membership_is_group_invariant(g, v) -> None:
    require(membership(SPEC, v) == membership(SPEC, apply(g, v)), f"{g} {v}")


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(B2), vectors3)
def test_membership_is_group_invariant_in_rank_two(g, v) -> None:
    require(membership(SPEC_SMALL, v) == membership(SPEC_SMALL, apply(g, v)), f"{g} {v}")


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(D3), vectors4)
def test_membership_is_invariant_under_type_d(g, v) -> None:
    require(membership(SPEC_D, v) == membership(SPEC_D, apply(g, v)), f"{g} {v}")


@settings(max_examples=60, deadline=None)
@given(series, series, series)
def test_series_ring_laws(a, b, c) -> None:
    require(series_add(a, b) == series_add(b, a), "addition commutes")
    require(series_mul(a, b) == series_mul(b, a), "multiplication commutes")
    require(
        series_mul(a, series_add(b, c)) == series_add(series_mul(a, b), series_mul(a, c)),
        "distributive",
    )
