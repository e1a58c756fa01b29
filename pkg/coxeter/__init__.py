"""
coxeter package - signed permutation groups of kinds A, B and D.

Public surface:

- Kind, GroupElement, element(...)
- enumerate_group, group_order, identity, inverse, compose
- apply, simple_reflection
- descent_set, stat_des, stat_maj, stat_comaj, stat_cobin, element_stats
"""

from __future__ import annotations

from .descents import (
    DescentSet,
    ElementStats,
    descent_set,
    element_stats,
    stat_cobin,
    stat_comaj,
    stat_des,
    stat_maj,
)
from .group import (
    GroupElement,
    Kind,
    apply,
    compose,
    element,
    enumerate_group,
    group_order,
    identity,
    inverse,
    simple_reflection,
)

__all__ = [
    "DescentSet",
    "ElementStats",
    "GroupElement",
    "Kind",
    "apply",
    "compose",
    "descent_set",
    "element",
    "element_stats",
    "enumerate_group",
    "group_order",
    "identity",
    "inverse",
    "simple_reflection",
    "stat_cobin",
    "stat_comaj",
    "stat_des",
    "stat_maj",
]


def get_version() -> str:
    return "coxeter-0.1.0"
