#!/usr/bin/env python3
"""
identities/distributions.py - Statistic distributions over B_m by direct
enumeration of the group.
"""

from __future__ import annotations

from collections import Counter
from typing import Dict, Tuple

from coxeter.descents import element_stats
from coxeter.group import Kind, enumerate_group
from identities.qpoly import QPolynomial, qpoly


def _counts(m: int, key) -> Counter:
    return Counter(key(element_stats(g)) for g in enumerate_group(Kind.B, m))


def eulerian_B(m: int) -> QPolynomial:
    """sum over B_m of t^des."""
    return qpoly(_counts(m, lambda s: s.des))


def comaj_distribution(m: int) -> QPolynomial:
    """sum over B_m of t^comaj."""
    return qpoly(_counts(m, lambda s: s.comaj))


def joint_distribution(m: int, c: int, b: int, d: int) -> QPolynomial:
    """sum over B_m of t^(c comaj + b des + 2d cobin)."""
    return qpoly(_counts(m, lambda s: c * s.comaj + b * s.des + 2 * d * s.cobin))


def des_comaj_distribution(m: int) -> Dict[Tuple[int, int], int]:
    """sum over B_m of x^des q^comaj as {(des, comaj): count}."""
    return dict(_counts(m, lambda s: (s.des, s.comaj)))


def des_comaj_cobin_distribution(m: int) -> Dict[Tuple[int, int, int], int]:
    """sum over B_m of x^des q^comaj y^(2 cobin) as {(x, q, y) degrees: count}."""
    return dict(_counts(m, lambda s: (s.des, s.comaj, 2 * s.cobin)))
