"""Peirce polynomials and Peirce symbols of nonassociative monomials.

The two central recursions, over the canonical binary-tree form:

  rho(z) = 1,            rho(m1*m2, q) = q*(rho(m1, q) + rho(m2, q))
  sym(z) = 0,            sym(m1*m2)    = p*(sym(m1) + sym(m2))
                                         + rho(m1, a)*rho(m2, b)
                                         + rho(m1, b)*rho(m2, a)

Both are memoized per canonical monomial, since shared subtrees recur
heavily in enumeration and identity evaluation.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Sequence

from .magma import Monomial, plenary_power, principal_power
from .poly import Poly1, Poly3, divide_exact

__all__ = [
    "peirce_poly",
    "peirce_symbol",
    "principal_peirce_closed",
    "plenary_peirce_closed",
    "principal_symbol_closed",
    "plenary_symbol_closed",
    "half_specialization",
    "total_peirce_value",
]


@functools.cache
def peirce_poly(m: Monomial) -> Poly1:
    """rho(m, t): 1 on the generator, t*(rho(left) + rho(right)) on products."""
    if m.is_atom:
        return Poly1.const(1)
    return Poly1.t() * (peirce_poly(m.left) + peirce_poly(m.right))


@functools.cache
def peirce_symbol(m: Monomial) -> Poly3:
    """The trivariate symbol in (a, b, p); symmetric under a <-> b."""
    if m.is_atom:
        return Poly3.zero()
    left, right = m.left, m.right
    rho_la = Poly3.from_poly1(peirce_poly(left), "a")
    rho_lb = Poly3.from_poly1(peirce_poly(left), "b")
    rho_ra = Poly3.from_poly1(peirce_poly(right), "a")
    rho_rb = Poly3.from_poly1(peirce_poly(right), "b")
    return (
        Poly3.var("p") * (peirce_symbol(left) + peirce_symbol(right))
        + rho_la * rho_rb
        + rho_lb * rho_ra
    )


def principal_peirce_closed(n: int) -> Poly1:
    """rho(z^n, q) = (2q^n - q^(n-1) - q)/(q - 1), as an exact quotient."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    numerator = Poly1({n: 2, n - 1: -1}) + Poly1({1: -1})
    return divide_exact(numerator, Poly1({1: 1, 0: -1}))


def plenary_peirce_closed(n: int) -> Poly1:
    """rho(z^[n], q) = (2q)^(n-1)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return Poly1({n - 1: 2 ** (n - 1)})


def _divided_difference(f: Poly1, name: str) -> Poly3:
    """(f(p) - f(name)) / (p - name)."""
    diff = Poly3.from_poly1(f, "p") - Poly3.from_poly1(f, name)
    return diff.div_linear("p", Poly3.var(name))


def _divided_difference_at(f: Poly1, value: Fraction) -> Poly3:
    """(f(p) - f(value)) / (p - value)."""
    quotient = divide_exact(f - f(value), Poly1({1: 1, 0: -value}))
    return Poly3.from_poly1(quotient, "p")


def principal_symbol_closed(n: int) -> Poly3:
    """Symbol of z^n via divided differences of the principal rho."""
    rho = principal_peirce_closed(n)
    return (
        _divided_difference(rho, "a")
        + _divided_difference(rho, "b")
        - _divided_difference_at(rho, Fraction(1, 2))
    )


def plenary_symbol_closed(n: int) -> Poly3:
    """Symbol of z^[n]: 2^(n-1) * (p^(n-1) - (2ab)^(n-1)) / (p - 2ab)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    two_ab = Poly3.var("a") * Poly3.var("b") * 2
    numerator = Poly3.var("p") ** (n - 1) - two_ab ** (n - 1)
    return numerator.div_linear("p", two_ab) * 2 ** (n - 1)


def half_specialization(m: Monomial) -> Poly3:
    """(rho(m, p) - rho(m, a)) / (p - a); equals the symbol at b = 1/2."""
    return _divided_difference(peirce_poly(m), "a")


def total_peirce_value(m: Monomial, leaf_values: Sequence[Fraction], q: Fraction) -> Fraction:
    """Symmetrized Peirce operator value: (deg-1)! * sum(leaves) * rho(m, q)."""
    if len(leaf_values) != m.degree:
        raise ValueError(f"expected {m.degree} leaf values, got {len(leaf_values)}")
    total = sum((Fraction(v) for v in leaf_values), Fraction(0))
    return math.factorial(m.degree - 1) * total * peirce_poly(m)(q)


# Self-checks used by callers that want a cheap oracle; the closed forms and
# the recursions must agree for principal and plenary powers.
def closed_forms_agree(n: int) -> bool:
    return (
        principal_peirce_closed(n) == peirce_poly(principal_power(n))
        and plenary_peirce_closed(n) == peirce_poly(plenary_power(n))
        and principal_symbol_closed(n) == peirce_symbol(principal_power(n))
        and plenary_symbol_closed(n) == peirce_symbol(plenary_power(n))
    )
