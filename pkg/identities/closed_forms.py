#!/usr/bin/env python3
"""
identities/closed_forms.py - Closed-form series and polynomials that the
verification drivers compare against enumeration.

Univariate objects live in identities.qpoly; the bivariate (x, q) and
trivariate (x, q, y) sides are sympy Polys truncated by x-degree.
"""

from __future__ import annotations

from typing import Dict, Sequence, Tuple

import sympy

from conegeom.cone import ConeSpec, cone_spec
from coxeter.group import Kind
from genfunc.expansion import expand_rational
from genfunc.series import TruncatedSeries
from identities.distributions import (
    des_comaj_cobin_distribution,
    des_comaj_distribution,
    eulerian_B,
)
from identities.qpoly import (
    QPolynomial,
    binomial_power,
    monomial,
    poly_coefficients,
    polynomial_series,
    q_bracket,
    q_factorial,
    qpoly,
)
from validation.error_protocol import SpecificationError

x, q, y = sympy.symbols("x q y")

Monomials = Dict[Tuple[int, ...], int]


# --- univariate ------------------------------------------------------------


def cube_series(m: int, truncation: int) -> TruncatedSeries:
    """sum_k (2k+1)^m t^k: lattice points of the dilated cube [-1, 1]^m."""
    return TruncatedSeries(truncation, tuple((2 * k + 1) ** m for k in range(truncation + 1)))


def cross_polytope_series(m: int, truncation: int) -> TruncatedSeries:
    """(1+t)^m / (1-t)^(m+1): lattice points of the dilated cross-polytope."""
    return expand_rational(poly_coefficients(binomial_power(m)), [1] * (m + 1), truncation)


def eulerian_series(m: int, truncation: int) -> TruncatedSeries:
    """eulerian_B(m) / (1-t)^(m+1)."""
    return expand_rational(poly_coefficients(eulerian_B(m)), [1] * (m + 1), truncation)


def comaj_closed_form(m: int) -> QPolynomial:
    """(1+t)^m [m]_t!."""
    return binomial_power(m) * q_factorial(m)


def _check_almost_constant(n_minus_1: int, b: int, c: int) -> None:
    if n_minus_1 < 1:
        raise SpecificationError(f"n-1 must be >= 1, got {n_minus_1}")
    if b < 0 or c < 0 or (b == 0 and c == 0):
        raise SpecificationError(f"need b, c >= 0 not both zero, got b={b}, c={c}")


def almost_constant_spec(n_minus_1: int, b: int, c: int) -> ConeSpec:
    """Kind B cone with a_1 = ... = a_{n-2} = c and a_{n-1} = c + b."""
    _check_almost_constant(n_minus_1, b, c)
    return cone_spec(Kind.B, n_minus_1 + 1, (c,) * (n_minus_1 - 1) + (c + b,))


def ehrhart_almost_constant(n_minus_1: int, b: int, c: int, truncation: int) -> TruncatedSeries:
    """
    Ehrhart series of the almost-constant polytope:

        b = 0:   [c]_t (1 + t^c)^(n-1) / (1 - t^c)^n
        b >= 1:  [b]_t sum_k ([k+1]_{t^c} + t^c [k]_{t^c})^(n-1) t^(b k)
    """
    _check_almost_constant(n_minus_1, b, c)
    if b == 0:
        numerator = q_bracket(c) * (qpoly({0: 1}) + monomial(c)) ** n_minus_1
        return expand_rational(
            poly_coefficients(numerator), [c] * (n_minus_1 + 1), truncation
        )
    total = qpoly({})
    for k in range(truncation // b + 1):
        inner = q_bracket(k + 1, c) + monomial(c) * q_bracket(k, c)
        total = total + inner**n_minus_1 * monomial(b * k)
    return polynomial_series(q_bracket(b) * total, truncation)


def lecture_hall_weights(n: int, d: int, c: int, b: int) -> Tuple[int, ...]:
    """a_i = 2di + c for i <= n-2 and a_{n-1} = 2d(n-1) + c + b."""
    if n < 2:
        raise SpecificationError(f"n must be >= 2, got {n}")
    if d < 0 or b < 0 or c < -2 * d:
        raise SpecificationError(f"need d >= 0, b >= 0, c >= -2d; got d={d}, c={c}, b={b}")
    if d == 0 and c == 0 and b == 0:
        raise SpecificationError("d, c and b are all zero")
    return tuple(2 * d * i + c for i in range(1, n - 1)) + (2 * d * (n - 1) + c + b,)


def lecture_hall_spec(n: int, d: int, c: int, b: int) -> ConeSpec:
    return cone_spec(Kind.B, n, lecture_hall_weights(n, d, c, b))


def interpolating_family(n: int, k: int) -> ConeSpec:
    """Kind B cone with weights (0, ..., 0, 1, ..., 1), k ones."""
    if not 1 <= k <= n - 1:
        raise SpecificationError(f"need 1 <= k <= {n - 1}, got k={k}")
    return cone_spec(Kind.B, n, (0,) * (n - 1 - k) + (1,) * k)


# --- multivariate ------------------------------------------------------------


def _poly(monomials: Monomials, gens: Sequence[sympy.Symbol]) -> sympy.Poly:
    if not monomials:
        return sympy.Poly(0, *gens, domain=sympy.ZZ)
    return sympy.Poly.from_dict(dict(monomials), *gens, domain=sympy.ZZ)


def truncate_x(poly: sympy.Poly, max_x_degree: int) -> Monomials:
    """Monomials of x-degree <= max_x_degree (x is the first generator)."""
    return {
        monom: int(c)
        for monom, c in poly.as_dict().items()
        if c and monom[0] <= max_x_degree
    }


def _geometric_in_x(monom: sympy.Expr, gens: Sequence[sympy.Symbol], max_x_degree: int) -> sympy.Poly:
    """1 + m + m^2 + ... + m^max_x_degree for a monomial m containing x once."""
    terms = sum((monom**k for k in range(max_x_degree + 1)), sympy.Integer(0))
    return sympy.Poly(terms, *gens, domain=sympy.ZZ)


def chow_gessel_side(m: int, max_x_degree: int) -> Monomials:
    """
    prod_{i=0}^{m} (1 - x q^i) * sum_{k} ([k+1]_q + q [k]_q)^m x^k,
    truncated at x^max_x_degree.
    """
    gens = (x, q)
    series = sympy.Integer(0)
    for k in range(max_x_degree + 1):
        bracket = sum((q**i for i in range(k + 1)), sympy.Integer(0))
        bracket += q * sum((q**i for i in range(k)), sympy.Integer(0))
        series += bracket**m * x**k
    product = sympy.Integer(1)
    for i in range(m + 1):
        product *= 1 - x * q**i
    return truncate_x(sympy.Poly(sympy.expand(product * series), *gens, domain=sympy.ZZ), max_x_degree)


def chow_gessel_group_side(m: int) -> Monomials:
    return dict(des_comaj_distribution(m))


def eqn_ps_group_side(n: int, max_x_degree: int) -> Monomials:
    """
    sum over B_n of q^comaj x^des (y^2)^cobin
    / prod_{i=0}^{n-1} (1 - x q^(n-i) y^(2((i+1) + ... + n))),
    truncated at x^max_x_degree. Monomials are keyed (x, q, y).
    """
    gens = (x, q, y)
    numerator = _poly(des_comaj_cobin_distribution(n), gens)
    total = numerator
    for i in range(n):
        y_exp = n * (n + 1) - i * (i + 1)
        factor = _geometric_in_x(x * q ** (n - i) * y**y_exp, gens, max_x_degree)
        total = _poly(truncate_x(total * factor, max_x_degree), gens)
    return truncate_x(total, max_x_degree)
