#!/usr/bin/env python3
"""
conegeom/lattice.py - Lattice points of a cone at a fixed grading.

Enumeration works inside a max-norm box that provably contains every cone
point of grading d:

    B:     a_{n-1} |x_i| <= x_n, so |x_i| <= d // a_{n-1}
    A, D:  each fundamental-domain point is a nonnegative combination of the
           generators b_j, and signed permutations preserve the max-norm, so
           |x_i| <= max_j floor(d * max_i |b_ij| / g_j) with g_j = grading(b_j)
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence, Tuple

from conegeom.cone import ConeSpec, check_salient, generator_columns
from conegeom.membership import membership
from coxeter.group import Kind
from validation.error_protocol import DimensionError, SpecificationError

Vector = Tuple[int, ...]


def in_lattice(spec: ConeSpec, x: Sequence[int]) -> bool:
    """Z^n for kinds A and B; x_1 = ... = x_{n-1} mod 2 for kind D."""
    if len(x) != spec.n:
        raise DimensionError(f"expected a vector of length {spec.n}, got {len(x)}")
    if spec.kind is not Kind.D:
        return True
    parity = x[0] % 2
    return all(v % 2 == parity for v in x[1:-1])


def box_radius(spec: ConeSpec, d: int) -> int:
    if d < 0:
        raise SpecificationError(f"grading must be nonnegative, got {d}")
    if spec.kind is Kind.B:
        return d // spec.a[-1]
    gradings = check_salient(spec)
    columns = generator_columns(spec)
    return max(
        (d * max(abs(v) for v in col)) // g for col, g in zip(columns, gradings)
    )


def lattice_points(spec: ConeSpec, d: int) -> Iterator[Vector]:
    """
    Yield lattice points of the cone with grading exactly d, in
    lexicographic order.
    """
    radius = box_radius(spec, d)
    span = range(-radius, radius + 1)
    if spec.kind is Kind.A:
        for head in itertools.product(span, repeat=spec.n - 1):
            last = d - sum(head)
            if abs(last) > radius:
                continue
            x = head + (last,)
            if membership(spec, x):
                yield x
        return

    for head in itertools.product(span, repeat=spec.n - 1):
        x = head + (d,)
        if in_lattice(spec, x) and membership(spec, x):
            yield x


def count_points(spec: ConeSpec, d: int) -> int:
    return sum(1 for _ in lattice_points(spec, d))
