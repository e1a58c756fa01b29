#!/usr/bin/env python3
"""
coxeter/group.py - Elements of the groups S_m (kind A), B_m and D_m.

A group element is stored in one-line notation: ``pi`` is a permutation of
1..m and ``eps`` a sign vector, acting by e_i -> eps_i * e_{pi(i)}. Kinds B
and D act on vectors of length m + 1 and fix the last coordinate; kind A
acts on vectors of length m.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence, Tuple, Union

from validation.error_protocol import DimensionError, SpecificationError


class Kind(str, Enum):
    A = "A"
    B = "B"
    D = "D"

    @classmethod
    def parse(cls, value: Union["Kind", str]) -> "Kind":
        if isinstance(value, Kind):
            return value
        try:
            return cls(str(value).strip().upper())
        except ValueError as exc:
            raise SpecificationError(
                f"unknown kind {value!r}; expected one of A, B, D"
            ) from exc


Vector = Tuple[int, ...]


@dataclass(frozen=True)
class GroupElement:
    kind: Kind
    pi: Tuple[int, ...]
    eps: Tuple[int, ...]

    def __post_init__(self) -> None:
        m = len(self.pi)
        if sorted(self.pi) != list(range(1, m + 1)):
            raise SpecificationError(f"pi={self.pi} is not a permutation of 1..{m}")
        if len(self.eps) != m or any(e not in (1, -1) for e in self.eps):
            raise SpecificationError(f"eps={self.eps} must hold {m} signs +1/-1")
        if self.kind is Kind.A and any(e != 1 for e in self.eps):
            raise SpecificationError("kind A elements carry no sign changes")
        if self.kind is Kind.D and math.prod(self.eps) != 1:
            raise SpecificationError("kind D elements need an even number of sign changes")

    @property
    def m(self) -> int:
        return len(self.pi)

    @property
    def dimension(self) -> int:
        """Length of the vectors this element acts on."""
        return self.m if self.kind is Kind.A else self.m + 1

    def signed(self) -> Tuple[int, ...]:
        """Signed one-line notation (eps_1 pi(1), ..., eps_m pi(m))."""
        return tuple(e * p for e, p in zip(self.eps, self.pi))

    def label(self) -> str:
        return " ".join(str(v) for v in self.signed())

    def __str__(self) -> str:
        return f"{self.kind.value}[{self.label()}]"


def element(kind: Union[Kind, str], pi: Sequence[int], eps: Sequence[int] = ()) -> GroupElement:
    """Convenience constructor; eps defaults to all +1."""
    kind = Kind.parse(kind)
    pi = tuple(int(p) for p in pi)
    eps = tuple(int(e) for e in eps) if eps else (1,) * len(pi)
    return GroupElement(kind, pi, eps)


def _check_rank(kind: Kind, m: int) -> None:
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise SpecificationError(f"group rank m must be a positive integer, got {m!r}")
    if kind is Kind.D and m < 2:
        raise SpecificationError("kind D requires m >= 2")


def group_order(kind: Union[Kind, str], m: int) -> int:
    kind = Kind.parse(kind)
    _check_rank(kind, m)
    if kind is Kind.A:
        return math.factorial(m)
    if kind is Kind.B:
        return 2**m * math.factorial(m)
    return 2 ** (m - 1) * math.factorial(m)


def enumerate_group(kind: Union[Kind, str], m: int) -> Iterator[GroupElement]:
    """
    Yield every element once: pi in lexicographic order, then eps with +1
    before -1 position by position. The identity comes first.
    """
    kind = Kind.parse(kind)
    _check_rank(kind, m)
    for pi in itertools.permutations(range(1, m + 1)):
        if kind is Kind.A:
            yield GroupElement(kind, pi, (1,) * m)
            continue
        for eps in itertools.product((1, -1), repeat=m):
            if kind is Kind.D and math.prod(eps) != 1:
                continue
            yield GroupElement(kind, pi, eps)


def identity(kind: Union[Kind, str], m: int) -> GroupElement:
    kind = Kind.parse(kind)
    _check_rank(kind, m)
    return GroupElement(kind, tuple(range(1, m + 1)), (1,) * m)


def inverse(g: GroupElement) -> GroupElement:
    pi_inv = [0] * g.m
    for i, p in enumerate(g.pi, start=1):
        pi_inv[p - 1] = i
    eps_inv = tuple(g.eps[k - 1] for k in pi_inv)
    return GroupElement(g.kind, tuple(pi_inv), eps_inv)


def compose(g: GroupElement, h: GroupElement) -> GroupElement:
    """The element acting as g after h."""
    if g.kind is not h.kind or g.m != h.m:
        raise SpecificationError(f"cannot compose {g} with {h}")
    pi = tuple(g.pi[h.pi[i] - 1] for i in range(g.m))
    eps = tuple(h.eps[i] * g.eps[h.pi[i] - 1] for i in range(g.m))
    return GroupElement(g.kind, pi, eps)


def apply(g: GroupElement, v: Sequence[int]) -> Vector:
    """Return w with w_{pi(i)} = eps_i v_i; kinds B/D keep the last entry."""
    if len(v) != g.dimension:
        raise DimensionError(
            f"{g} acts on vectors of length {g.dimension}, got {len(v)}"
        )
    w = list(v)
    for i in range(g.m):
        w[g.pi[i] - 1] = g.eps[i] * v[i]
    return tuple(w)


def simple_reflection(kind: Union[Kind, str], m: int, j: int, v: Sequence[int]) -> Vector:
    """
    Apply the simple generator s_j.

    A: swap coordinates j and j+1 (1 <= j < m).
    B: j = 1 negates coordinate 1; j >= 2 swaps j-1 and j.
    D: j = 1 reflects in x_1 + x_2 = 0; j >= 2 swaps j-1 and j.
    """
    kind = Kind.parse(kind)
    _check_rank(kind, m)
    dim = m if kind is Kind.A else m + 1
    if len(v) != dim:
        raise DimensionError(f"expected a vector of length {dim}, got {len(v)}")
    top = m - 1 if kind is Kind.A else m
    if not 1 <= j <= top:
        raise SpecificationError(f"simple generator index {j} outside 1..{top}")
    w = list(v)
    if kind is Kind.A:
        w[j - 1], w[j] = w[j], w[j - 1]
    elif j >= 2:
        w[j - 2], w[j - 1] = w[j - 1], w[j - 2]
    elif kind is Kind.B:
        w[0] = -w[0]
    else:
        w[0], w[1] = -v[1], -v[0]
    return tuple(w)
