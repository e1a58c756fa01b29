#!/usr/bin/env python3
"""
conegeom/membership.py - Brute-force membership in a symmetric cone.

x lies in the cone iff the defining inequality holds for every group
element:

    A:     a_1 x_{pi(1)} + ... + a_n x_{pi(n)} >= 0
    B, D:  eps_1 a_1 x_{pi(1)} + ... + eps_{n-1} a_{n-1} x_{pi(n-1)} <= x_n

Each group element contributes one normal vector u with u.x >= 0; the
distinct normals are cached per spec.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence, Tuple

from conegeom.cone import ConeSpec, facet_matrix
from coxeter.group import Kind, apply, enumerate_group
from validation.error_protocol import DimensionError

Vector = Tuple[int, ...]


@lru_cache(maxsize=256)
def orbit_normals(spec: ConeSpec) -> Tuple[Vector, ...]:
    normals = set()
    if spec.kind is Kind.A:
        for g in enumerate_group(spec.kind, spec.m):
            normals.add(apply(g, spec.a))
    else:
        base = tuple(spec.a) + (-1,)
        for g in enumerate_group(spec.kind, spec.m):
            normals.add(tuple(-v for v in apply(g, base)))
    return tuple(sorted(normals))


def _dot(u: Sequence[int], x: Sequence[int]) -> int:
    return sum(p * q for p, q in zip(u, x))


def membership(spec: ConeSpec, x: Sequence[int]) -> bool:
    if len(x) != spec.n:
        raise DimensionError(f"expected a vector of length {spec.n}, got {len(x)}")
    return all(_dot(u, x) >= 0 for u in orbit_normals(spec))


def in_fundamental_domain(spec: ConeSpec, y: Sequence[int]) -> bool:
    """True iff every facet functional is nonnegative at y."""
    if len(y) != spec.n:
        raise DimensionError(f"expected a vector of length {spec.n}, got {len(y)}")
    return all(_dot(row, y) >= 0 for row in facet_matrix(spec))
