#!/usr/bin/env python3
"""
coxeter/descents.py - Descent sets and the statistics des, maj, comaj, cobin.

Descents are read off the signed one-line notation:

    A:  j in D  iff  pi(j) > pi(j+1),                      1 <= j < m
    B:  j in D  iff  eps_{j-1}pi(j-1) > eps_j pi(j),       eps_0 pi(0) := 0
    D:  as B, with eps_0 pi(0) := -eps_2 pi(2)

For B and D the index range is 1..m.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Iterator, Tuple

from coxeter.group import GroupElement, Kind
from validation.error_protocol import SpecificationError


@dataclass(frozen=True)
class DescentSet:
    kind: Kind
    m: int
    indices: Tuple[int, ...]

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, j: object) -> bool:
        return j in self.indices


def descent_set(g: GroupElement) -> DescentSet:
    w = g.signed()
    if g.kind is Kind.A:
        found = tuple(j for j in range(1, g.m) if w[j - 1] > w[j])
        return DescentSet(g.kind, g.m, found)

    if g.kind is Kind.B:
        previous = 0
    else:
        previous = -w[1]
    found = []
    for j in range(1, g.m + 1):
        if previous > w[j - 1]:
            found.append(j)
        previous = w[j - 1]
    return DescentSet(g.kind, g.m, tuple(found))


def _require_b(g: GroupElement) -> DescentSet:
    if g.kind is not Kind.B:
        raise SpecificationError(
            f"des/maj/comaj/cobin are defined on kind B elements, got kind {g.kind.value}"
        )
    return descent_set(g)


def stat_des(g: GroupElement) -> int:
    return len(_require_b(g))


def stat_maj(g: GroupElement) -> int:
    return sum(j - 1 for j in _require_b(g))


def stat_comaj(g: GroupElement) -> int:
    return sum(g.m + 1 - j for j in _require_b(g))


def stat_cobin(g: GroupElement) -> int:
    """Sum over descents j of j + (j+1) + ... + m."""
    m = g.m
    return sum((m * (m + 1) - (j - 1) * j) // 2 for j in _require_b(g))


@dataclass(frozen=True)
class ElementStats:
    element: GroupElement
    descents: Tuple[int, ...]
    des: int
    maj: int
    comaj: int
    cobin: int

    def as_dict(self) -> Dict[str, Any]:
        return {
            "element": self.element.label(),
            "descents": list(self.descents),
            "des": self.des,
            "maj": self.maj,
            "comaj": self.comaj,
            "cobin": self.cobin,
        }


def element_stats(g: GroupElement) -> ElementStats:
    return ElementStats(
        element=g,
        descents=_require_b(g).indices,
        des=stat_des(g),
        maj=stat_maj(g),
        comaj=stat_comaj(g),
        cobin=stat_cobin(g),
    )
