#!/usr/bin/env python3
"""
conegeom/cone.py - Cone specifications and their facet/generator matrices.

A ConeSpec selects one symmetric cone:

    A:  a_1 <= ... <= a_n,  a_1 + ... + a_n = 1,   lattice Z^n
    B:  0 <= a_1 <= ... <= a_{n-1} != 0,           lattice Z^n
    D:  |a_1| <= a_2 <= ... <= a_{n-1} != 0,       lattice {x_1 = ... = x_{n-1} mod 2}

The facet matrix A has the walls of the fundamental domain as its first
rows and the defining inequality last. The generator matrix B holds the
primitive generators b_1..b_n of the fundamental domain as columns, with
A.B = I for kinds A and B and A.B = diag(2, ..., 2, 1) for kind D.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Sequence, Tuple, Union

import sympy

from coxeter.group import Kind
from validation.error_protocol import DimensionError, SaliencyError, SpecificationError

Vector = Tuple[int, ...]
Matrix = Tuple[Vector, ...]


@dataclass(frozen=True)
class ConeSpec:
    kind: Kind
    n: int
    a: Vector

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", Kind.parse(self.kind))
        object.__setattr__(self, "a", tuple(self.a))
        kind, n, a = self.kind, self.n, self.a
        if not isinstance(n, int) or isinstance(n, bool) or n < 2:
            raise SpecificationError(f"ambient dimension n must be an integer >= 2, got {n!r}")
        expected = n if kind is Kind.A else n - 1
        if len(a) != expected:
            raise DimensionError(
                f"kind {kind.value} with n={n} needs {expected} weights, got {len(a)}"
            )
        if kind is Kind.A:
            _require_sorted(a, 0)
            if sum(a) != 1:
                raise SpecificationError(f"kind A weights must sum to 1, got sum {sum(a)}")
        elif kind is Kind.B:
            if a[0] < 0:
                raise SpecificationError("kind B weights must be nonnegative")
            _require_sorted(a, 0)
            if a[-1] == 0:
                raise SpecificationError("kind B needs a_{n-1} != 0")
        else:
            if n < 3:
                raise SpecificationError("kind D requires n >= 3")
            if abs(a[0]) > a[1]:
                raise SpecificationError("kind D needs |a_1| <= a_2")
            _require_sorted(a, 1)
            if a[-1] == 0:
                raise SpecificationError("kind D needs a_{n-1} != 0")

    @property
    def m(self) -> int:
        """Rank of the symmetry group."""
        return self.n if self.kind is Kind.A else self.n - 1

    def describe(self) -> str:
        return f"{self.kind.value}(n={self.n}, a={','.join(map(str, self.a))})"

    def as_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind.value, "n": self.n, "a": list(self.a)}


def _require_sorted(a: Sequence[int], start: int) -> None:
    for i in range(start, len(a) - 1):
        if a[i] > a[i + 1]:
            raise SpecificationError(f"weights must be nondecreasing, got {tuple(a)}")


def cone_spec(kind: Union[Kind, str], n: int, a: Sequence[int]) -> ConeSpec:
    return ConeSpec(Kind.parse(kind), int(n), tuple(int(x) for x in a))


def _unit(n: int, i: int) -> list:
    row = [0] * n
    row[i - 1] = 1
    return row


def facet_matrix(spec: ConeSpec) -> Matrix:
    """Rows are the facet functionals of the fundamental domain."""
    n, a = spec.n, spec.a
    rows = []
    if spec.kind is Kind.A:
        for i in range(1, n):
            row = _unit(n, i)
            row[i] = -1
            rows.append(row)
        rows.append(list(a))
        return tuple(tuple(r) for r in rows)

    if spec.kind is Kind.B:
        rows.append(_unit(n, 1))
        first_chain = 2
    else:
        rows.append([1, 1] + [0] * (n - 2))
        rows.append([-1, 1] + [0] * (n - 2))
        first_chain = 3
    for j in range(first_chain, n):
        row = _unit(n, j)
        row[j - 2] = -1
        rows.append(row)
    rows.append([-x for x in a] + [1])
    return tuple(tuple(r) for r in rows)


def _tail_sum(a: Sequence[int], j: int) -> int:
    """a_j + ... + a_{n-1} (1-based j)."""
    return sum(a[j - 1:])


def generator_columns(spec: ConeSpec) -> Matrix:
    """Primitive generators b_1..b_n of the fundamental domain."""
    n, a = spec.n, spec.a
    columns = []
    if spec.kind is Kind.A:
        for j in range(1, n):
            s = sum(a[:j])
            columns.append(tuple(1 - s if i <= j else -s for i in range(1, n + 1)))
        columns.append((1,) * n)
        return tuple(columns)

    if spec.kind is Kind.B:
        for j in range(1, n):
            col = [0] * (j - 1) + [1] * (n - j) + [_tail_sum(a, j)]
            columns.append(tuple(col))
    else:
        columns.append((1,) * (n - 1) + (_tail_sum(a, 1),))
        columns.append((-1,) + (1,) * (n - 2) + (_tail_sum(a, 2) - a[0],))
        for j in range(3, n):
            col = [0] * (j - 1) + [2] * (n - j) + [2 * _tail_sum(a, j)]
            columns.append(tuple(col))
    columns.append(tuple(_unit(n, n)))
    return tuple(columns)


@dataclass(frozen=True)
class GeneratorMatrix:
    spec: ConeSpec
    columns: Matrix

    def rows(self) -> Matrix:
        return tuple(zip(*self.columns))

    def to_sympy(self) -> sympy.Matrix:
        return sympy.Matrix(self.rows())


def generator_matrix(spec: ConeSpec) -> GeneratorMatrix:
    return GeneratorMatrix(spec, generator_columns(spec))


def determinant(matrix: Union[GeneratorMatrix, Sequence[Sequence[int]]]) -> int:
    """Exact determinant of a square integer matrix."""
    if isinstance(matrix, GeneratorMatrix):
        return int(matrix.to_sympy().det())
    return int(sympy.Matrix([list(r) for r in matrix]).det())


def lattice_index(spec: ConeSpec) -> int:
    """|Z^n / lattice|: 1 for kinds A and B, 2^(n-2) for kind D."""
    return 2 ** (spec.n - 2) if spec.kind is Kind.D else 1


def default_weights(spec: ConeSpec) -> Vector:
    """All ones for kind A; e_n for kinds B and D."""
    if spec.kind is Kind.A:
        return (1,) * spec.n
    return (0,) * (spec.n - 1) + (1,)


def grading(spec: ConeSpec, x: Sequence[int]) -> int:
    if len(x) != spec.n:
        raise DimensionError(f"expected a vector of length {spec.n}, got {len(x)}")
    return sum(x) if spec.kind is Kind.A else x[-1]


def generator_gradings(spec: ConeSpec) -> Vector:
    return tuple(grading(spec, col) for col in generator_columns(spec))


def check_salient(spec: ConeSpec) -> Vector:
    """Return the generator gradings; raise SaliencyError if any is <= 0."""
    gradings = generator_gradings(spec)
    for j, g in enumerate(gradings, start=1):
        if g <= 0:
            raise SaliencyError(
                f"{spec.describe()} is not salient: generator b_{j} has grading {g}"
            )
    return gradings
