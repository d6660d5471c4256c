"""Monomial trees: canonical form, parsing, formatting, enumeration."""

import random

import pytest
from hypothesis import given, strategies as st

from peirce_lab.magma import (
    MAX_ENUMERATION_DEGREE,
    Monomial,
    MonomialSyntaxError,
    atom,
    enumerate_monomials,
    format_monomial,
    leaves_inorder,
    parse_monomial,
    plenary_power,
    power,
    principal_power,
    product,
)


def wedderburn_etherington(n_max):
    # Independent oracle: a(1)=1; a(2n-1) = sum_{i<n} a(i)a(2n-1-i);
    # a(2n) = a(n)(a(n)+1)/2 + sum_{i<n} a(i)a(2n-i).
    a = [0, 1]
    for n in range(2, n_max + 1):
        total = sum(a[i] * a[n - i] for i in range(1, (n + 1) // 2))
        if n % 2 == 0:
            h = a[n // 2]
            total += h * (h + 1) // 2
        a.append(total)
    return a


def test_enumeration_counts_match_recurrence():
    oracle = wedderburn_etherington(10)
    for d in range(1, 11):
        assert len(enumerate_monomials(d)) == oracle[d]


def test_enumeration_counts_small():
    assert [len(enumerate_monomials(d)) for d in range(1, 9)] == [1, 1, 1, 2, 3, 6, 11, 23]


def test_enumeration_no_duplicates_and_degrees():
    for d in range(1, 10):
        ms = enumerate_monomials(d)
        assert len(set(ms)) == len(ms)
        assert all(m.degree == d for m in ms)


def test_enumeration_guard():
    with pytest.raises(ValueError):
        enumerate_monomials(0)
    with pytest.raises(ValueError):
        enumerate_monomials(MAX_ENUMERATION_DEGREE + 1)
    assert len(enumerate_monomials(15, max_degree=15)) > 0


def test_atom_singleton_and_equality():
    assert atom() is atom()
    assert atom() == parse_monomial("z")
    assert atom().degree == 1
    assert atom().is_atom


def test_product_commutative():
    z = atom()
    z2 = product(z, z)
    left = product(z2, z)
    right = product(z, z2)
    assert left == right
    assert hash(left) == hash(right)


def test_powers():
    assert principal_power(1) == atom()
    assert principal_power(4).degree == 4
    assert plenary_power(4).degree == 8
    assert plenary_power(1) == atom()
    assert plenary_power(2) == principal_power(2)
    assert plenary_power(3) == product(principal_power(2), principal_power(2))
    assert power(atom(), 3) == principal_power(3)
    with pytest.raises(ValueError):
        power(atom(), 0)
    with pytest.raises(ValueError):
        plenary_power(0)


def test_parse_examples():
    assert parse_monomial("z") == atom()
    assert parse_monomial("z^2") == product(atom(), atom())
    assert parse_monomial("z*z") == principal_power(2)
    assert parse_monomial("z^[3]") == plenary_power(3)
    assert parse_monomial("(z^2)*(z^2)") == plenary_power(3)
    assert parse_monomial("z^2*z^2") == plenary_power(3)
    assert parse_monomial(" z ^ 4 ") == principal_power(4)
    assert parse_monomial("(z*z^2)*z") == product(product(atom(), principal_power(2)), atom())


def test_parse_nonassociativity_matters():
    # z*(z*(z*z)) vs ((z*z)*z)*z: degree 4 has two distinct shapes
    right_comb = parse_monomial("z*(z*(z*z))")
    left_comb = parse_monomial("((z*z)*z)*z")
    assert left_comb == right_comb  # both are principal z^4 up to commutativity
    assert parse_monomial("(z*z)*(z*z)") != left_comb


def test_parse_errors_carry_position():
    for bad in ["", "z*", "z^", "z^0", "(z", "z)", "z^[0]", "x", "z z", "z^[2", "*z"]:
        with pytest.raises(MonomialSyntaxError):
            parse_monomial(bad)
    try:
        parse_monomial("z*&")
    except MonomialSyntaxError as exc:
        assert exc.position == 2


def test_format_sugar():
    assert format_monomial(atom()) == "z"
    assert format_monomial(principal_power(5)) == "z^5"
    assert format_monomial(plenary_power(4)) == "z^[4]"
    assert format_monomial(plenary_power(2)) == "z^2"  # z^[2] == z^2, principal wins
    m = product(product(atom(), principal_power(2)), atom())
    assert parse_monomial(format_monomial(m)) == m


def test_format_parse_round_trip_full_enumeration():
    for d in range(1, 11):
        for m in enumerate_monomials(d):
            assert parse_monomial(format_monomial(m)) == m


@given(st.integers(min_value=1, max_value=12), st.randoms(use_true_random=False))
def test_random_tree_canonical_invariance(degree, rng):
    def build(d):
        if d == 1:
            return atom()
        split = rng.randint(1, d - 1)
        a, b = build(split), build(d - split)
        return product(a, b) if rng.random() < 0.5 else product(b, a)

    m = build(degree)
    assert m.degree == degree
    assert sum(1 for _ in leaves_inorder(m)) == degree
    assert parse_monomial(format_monomial(m)) == m


def test_leaves_inorder():
    m = parse_monomial("z^3")
    leaves = list(leaves_inorder(m))
    assert len(leaves) == 3
    assert all(leaf.is_atom for leaf in leaves)
