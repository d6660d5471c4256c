"""Exact polynomial arithmetic: ring axioms, division, rational roots."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from peirce_lab.poly import (
    ExactDivisionError,
    Poly1,
    Poly3,
    divide_exact,
    format_rational,
    parse_rational,
    rational_roots,
)

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=6)


def poly1s(max_degree=5):
    return st.dictionaries(
        st.integers(min_value=0, max_value=max_degree), rationals, max_size=4
    ).map(Poly1)


def test_rational_round_trip():
    for s, v in [("3", Fraction(3)), ("-1/2", Fraction(-1, 2)), ("0", Fraction(0))]:
        assert parse_rational(s) == v
    assert format_rational(Fraction(3)) == "3"
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert parse_rational(format_rational(Fraction(22, 7))) == Fraction(22, 7)


def test_poly1_basics():
    t = Poly1.t()
    f = 2 * t**2 + t
    assert f(Fraction(3)) == 21
    assert f.degree == 2
    assert f.coeff(1) == 1
    assert f.coeff(5) == 0
    assert Poly1.zero().is_zero
    assert Poly1.zero().degree == -1
    assert f.render() == "2*t^2 + t"
    assert Poly1.zero().render() == "0"


def test_poly1_derivative():
    t = Poly1.t()
    assert (t**3).derivative() == 3 * t**2
    assert Poly1.const(5).derivative().is_zero


@given(poly1s(), poly1s(), poly1s())
def test_poly1_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + Poly1.zero() == f
    assert f * Poly1.const(1) == f
    assert f - f == Poly1.zero()


@given(poly1s(), poly1s(), rationals)
def test_poly1_evaluation_homomorphism(f, g, x):
    assert (f + g)(x) == f(x) + g(x)
    assert (f * g)(x) == f(x) * g(x)


def test_divide_exact():
    t = Poly1.t()
    f = (t - 1) * (2 * t + 3)
    assert divide_exact(f, t - 1) == 2 * t + 3
    with pytest.raises(ExactDivisionError):
        divide_exact(t**2 + 1, t - 1)
    with pytest.raises(ZeroDivisionError):
        divide_exact(t, Poly1.zero())


@given(poly1s(), poly1s())
def test_divide_exact_inverts_multiplication(f, g):
    if g.is_zero:
        return
    assert divide_exact(f * g, g) == f


def test_rational_roots_examples():
    t = Poly1.t()
    # t(2t - 1)(t - 1)
    roots, residual = rational_roots(2 * t**3 - 3 * t**2 + t)
    assert roots == [(Fraction(0), 1), (Fraction(1, 2), 1), (Fraction(1), 1)]
    assert residual.degree == 0
    # 2(2t - 1)(2t + 1)(t + 1)
    roots, residual = rational_roots(8 * t**3 + 8 * t**2 - 2 * t - 2)
    assert roots == [(Fraction(-1), 1), (Fraction(-1, 2), 1), (Fraction(1, 2), 1)]
    assert residual.degree == 0
    # irreducible quadratic leaves a residual
    roots, residual = rational_roots(t**2 - 2)
    assert roots == []
    assert residual == t**2 - 2
    # multiplicity
    roots, _ = rational_roots((t - 1) ** 3 * (t + 2))
    assert roots == [(Fraction(-2), 1), (Fraction(1), 3)]


@given(st.lists(rationals, min_size=1, max_size=4))
def test_rational_roots_reconstruct(root_list):
    t = Poly1.t()
    f = Poly1.const(1)
    for r in root_list:
        f = f * (t - Poly1.const(r))
    roots, residual = rational_roots(f)
    assert residual.degree == 0
    rebuilt = Poly1.const(residual.coeff(0))
    for r, m in roots:
        rebuilt = rebuilt * (t - Poly1.const(r)) ** m
    assert rebuilt == f


def test_poly3_basics():
    a, b, p = Poly3.var("a"), Poly3.var("b"), Poly3.var("p")
    f = 4 * p + 8 * a * b
    assert f.render() == "4*p + 8*a*b"
    assert f(Fraction(1), Fraction(2), Fraction(3)) == 12 + 16
    assert f.swap_ab() == f
    g = a**2 + b
    assert g.swap_ab() == b**2 + a
    assert Poly3.zero().render() == "0"


def test_poly3_substitute_and_as_poly1():
    a, b, p = Poly3.var("a"), Poly3.var("b"), Poly3.var("p")
    f = p**2 + a * p + b
    g = f.substitute("a", Fraction(2)).substitute("b", Fraction(3))
    h = g.as_poly1("p")
    t = Poly1.t()
    assert h == t**2 + 2 * t + 3
    with pytest.raises(ValueError):
        f.as_poly1("p")  # still depends on a, b


def test_poly3_div_linear():
    a, p = Poly3.var("a"), Poly3.var("p")
    f = p**3 - a**3
    q = f.div_linear("p", a)
    assert q * (p - a) == f
    with pytest.raises(ExactDivisionError):
        (p**2 + 1).div_linear("p", a)


def test_poly3_from_poly1_and_compose3():
    t = Poly1.t()
    f = 2 * t**2 - t + 3
    a = Poly3.var("a")
    assert f.compose3(a) == 2 * a**2 - a + 3
    assert Poly3.from_poly1(f, "p") == f.compose3(Poly3.var("p"))


@given(poly1s(max_degree=3), rationals, rationals, rationals)
def test_poly3_evaluation_consistent(f, x, y, z):
    g = f.compose3(Poly3.var("b"))
    assert g(x, y, z) == f(y)
