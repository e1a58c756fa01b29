#!/usr/bin/env python3
"""
genfunc/builders.py - Generating functions of the symmetric cones as sums
of one simple rational term per group element.

build_general() uses the generator matrix and the group action:

    f_C = sum over sigma of  z^(sum_{j in D(sigma)} sigma b_j)
                             / prod_j (1 - z^(sigma b_j))

build_type_a/b/d() write the same sums straight from the explicit per-kind
formulas, without touching the generator matrix or the action. Both paths
emit denominators in the order b_1..b_n, the prefactor 1/(1 - z_1...z_n)
resp. 1/(1 - z_n) last.
"""

from __future__ import annotations

from typing import Callable, Dict, List

from conegeom.cone import ConeSpec, check_salient, generator_columns
from coxeter.descents import descent_set
from coxeter.group import GroupElement, Kind, apply, enumerate_group
from genfunc.terms import RationalSum, RationalTerm, Vector, add_vectors
from monitoring.structured_logger import get_logger, log_event
from validation.error_protocol import SpecificationError

logger = get_logger("genfunc.builders")


def _term(n: int, dens: List[Vector], g: GroupElement) -> RationalTerm:
    chosen = [dens[j - 1] for j in descent_set(g)]
    return RationalTerm(add_vectors(chosen, n), tuple(dens))


def _finish(spec: ConeSpec, terms: List[RationalTerm], route: str) -> RationalSum:
    log_event(
        logger,
        "genfunc.build.completed",
        {"spec": spec.describe(), "route": route, "terms": len(terms)},
    )
    return RationalSum(spec.n, tuple(terms))


def build_general(spec: ConeSpec) -> RationalSum:
    check_salient(spec)
    columns = generator_columns(spec)
    terms = []
    for g in enumerate_group(spec.kind, spec.m):
        dens = [apply(g, b) for b in columns]
        terms.append(_term(spec.n, dens, g))
    return _finish(spec, terms, "general")


def _require_kind(spec: ConeSpec, kind: Kind) -> None:
    if spec.kind is not kind:
        raise SpecificationError(
            f"builder for kind {kind.value} called with a kind {spec.kind.value} spec"
        )
    check_salient(spec)


def _signed_tail(g: GroupElement, n: int, j: int, weight: int) -> List[int]:
    """prod_{i=j}^{n-1} z_{pi(i)}^{eps_i} times z_n^weight, as an exponent list."""
    v = [0] * n
    for i in range(j, n):
        v[g.pi[i - 1] - 1] += g.eps[i - 1]
    v[n - 1] += weight
    return v


def build_type_a(spec: ConeSpec) -> RationalSum:
    """
    f_C = 1/(1 - z_1...z_n) * sum over pi of
          prod_{j in D(pi)} (z_1...z_n)^(-S_j) z_{pi(1)}...z_{pi(j)}
          / prod_{j<n} (1 - (z_1...z_n)^(-S_j) z_{pi(1)}...z_{pi(j)})

    with S_j = a_1 + ... + a_j.
    """
    _require_kind(spec, Kind.A)
    n, a = spec.n, spec.a
    partial = [sum(a[:j]) for j in range(1, n)]
    terms = []
    for g in enumerate_group(Kind.A, n):
        dens: List[Vector] = []
        for j in range(1, n):
            v = [-partial[j - 1]] * n
            for i in range(j):
                v[g.pi[i] - 1] += 1
            dens.append(tuple(v))
        dens.append((1,) * n)
        terms.append(_term(n, dens, g))
    return _finish(spec, terms, "type_a")


def build_type_b(spec: ConeSpec) -> RationalSum:
    """
    f_C = 1/(1 - z_n) * sum over (pi, eps) of
          prod_{j in D} prod_{i=j}^{n-1} z_{pi(i)}^{eps_i} z_n^{a_i}
          / prod_{j<n} (1 - prod_{i=j}^{n-1} z_{pi(i)}^{eps_i} z_n^{a_i})
    """
    _require_kind(spec, Kind.B)
    n, a = spec.n, spec.a
    terms = []
    for g in enumerate_group(Kind.B, n - 1):
        dens = [tuple(_signed_tail(g, n, j, sum(a[j - 1:]))) for j in range(1, n)]
        dens.append((0,) * (n - 1) + (1,))
        terms.append(_term(n, dens, g))
    return _finish(spec, terms, "type_b")


def build_type_d(spec: ConeSpec) -> RationalSum:
    """
    As kind B over even sign vectors, with the j-th factor

        (z_{pi(1)}^{-eps_1} z_n^{-a_1})^[j=2]
        * (prod_{i=j}^{n-1} z_{pi(i)}^{eps_i} z_n^{a_i})^(1 + [j>=3])
    """
    _require_kind(spec, Kind.D)
    n, a = spec.n, spec.a
    terms = []
    for g in enumerate_group(Kind.D, n - 1):
        dens: List[Vector] = []
        for j in range(1, n):
            tail = _signed_tail(g, n, j, sum(a[j - 1:]))
            if j == 2:
                tail[g.pi[0] - 1] -= g.eps[0]
                tail[n - 1] -= a[0]
            elif j >= 3:
                tail = [2 * x for x in tail]
            dens.append(tuple(tail))
        dens.append((0,) * (n - 1) + (1,))
        terms.append(_term(n, dens, g))
    return _finish(spec, terms, "type_d")


CLOSED_FORM_BUILDERS: Dict[Kind, Callable[[ConeSpec], RationalSum]] = {
    Kind.A: build_type_a,
    Kind.B: build_type_b,
    Kind.D: build_type_d,
}


def build_closed_form(spec: ConeSpec) -> RationalSum:
    return CLOSED_FORM_BUILDERS[spec.kind](spec)
