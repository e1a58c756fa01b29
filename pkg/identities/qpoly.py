#!/usr/bin/env python3
"""
identities/qpoly.py - Exact polynomials in t over the integers.

QPolynomial is sympy.Poly in the symbol t with domain ZZ.
"""

from __future__ import annotations

import math
from typing import Dict, Mapping

import sympy

from genfunc.series import TruncatedSeries
from validation.error_protocol import SpecificationError

t = sympy.Symbol("t")

QPolynomial = sympy.Poly


def qpoly(coefficients: Mapping[int, int]) -> QPolynomial:
    """Build a polynomial from degree -> coefficient."""
    if not coefficients:
        return sympy.Poly(0, t, domain=sympy.ZZ)
    return sympy.Poly.from_dict({(d,): c for d, c in coefficients.items()}, t, domain=sympy.ZZ)


def monomial(degree: int) -> QPolynomial:
    return qpoly({degree: 1})


def q_bracket(k: int, step: int = 1) -> QPolynomial:
    """[k] in t^step: 1 + t^step + ... + t^(step (k-1)); [0] = 0."""
    if k < 0:
        raise SpecificationError(f"q-bracket needs k >= 0, got {k}")
    return qpoly({step * i: 1 for i in range(k)}) if step else qpoly({0: k})


def q_factorial(k: int) -> QPolynomial:
    """[1][2]...[k]; [0]! = 1."""
    if k < 0:
        raise SpecificationError(f"q-factorial needs k >= 0, got {k}")
    result = qpoly({0: 1})
    for i in range(1, k + 1):
        result = result * q_bracket(i)
    return result


def poly_coefficients(poly: QPolynomial) -> Dict[int, int]:
    """Nonzero coefficients keyed by degree."""
    return {monom[0]: int(c) for monom, c in poly.as_dict().items() if c}


def evaluate_at_one(poly: QPolynomial) -> int:
    return int(poly.eval(1))


def is_palindromic(poly: QPolynomial, degree: int) -> bool:
    """True iff the coefficient of t^j equals that of t^(degree - j) for all j."""
    coeffs = poly_coefficients(poly)
    return all(coeffs.get(degree - d, 0) == c for d, c in coeffs.items())


def polynomial_series(poly: QPolynomial, truncation: int) -> TruncatedSeries:
    return TruncatedSeries.from_mapping(truncation, poly_coefficients(poly))


def binomial_power(m: int) -> QPolynomial:
    """(1 + t)^m."""
    return qpoly({k: math.comb(m, k) for k in range(m + 1)})
