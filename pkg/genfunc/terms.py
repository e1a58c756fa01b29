#!/usr/bin/env python3
"""
genfunc/terms.py - Rational terms and sums.

A RationalTerm stands for

    z^numerator / ((1 - z^d_1) (1 - z^d_2) ... (1 - z^d_k))

with exponent vectors in Z^n. A RationalSum is an ordered list of terms of
one common dimension; its order is the group enumeration order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

from validation.error_protocol import DimensionError, SpecificationError

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class RationalTerm:
    numerator: Vector
    denominators: Tuple[Vector, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "numerator", tuple(self.numerator))
        object.__setattr__(
            self, "denominators", tuple(tuple(d) for d in self.denominators)
        )
        dim = len(self.numerator)
        if not self.denominators:
            raise SpecificationError("a rational term needs at least one denominator")
        for d in self.denominators:
            if len(d) != dim:
                raise DimensionError(
                    f"denominator {d} does not match numerator dimension {dim}"
                )
            if not any(d):
                raise SpecificationError("denominator exponent vectors must be nonzero")

    @property
    def dimension(self) -> int:
        return len(self.numerator)

    def denominator_multiset(self) -> Tuple[Vector, ...]:
        return tuple(sorted(self.denominators))

    def as_dict(self) -> Dict[str, Any]:
        return {
            "numerator": list(self.numerator),
            "denominators": [list(d) for d in self.denominators],
        }


@dataclass(frozen=True)
class RationalSum:
    dimension: int
    terms: Tuple[RationalTerm, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(self.terms))
        for term in self.terms:
            if term.dimension != self.dimension:
                raise DimensionError(
                    f"term of dimension {term.dimension} in a sum of dimension {self.dimension}"
                )

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def as_document(self) -> List[Dict[str, Any]]:
        return [term.as_dict() for term in self.terms]

    def same_terms(self, other: "RationalSum") -> bool:
        """Equal as multisets of (numerator, denominator multiset)."""
        def key(s: RationalSum) -> Counter:
            return Counter((t.numerator, t.denominator_multiset()) for t in s.terms)

        return self.dimension == other.dimension and key(self) == key(other)


def add_vectors(vectors: Sequence[Sequence[int]], dimension: int) -> Vector:
    total = [0] * dimension
    for v in vectors:
        for i, x in enumerate(v):
            total[i] += x
    return tuple(total)
