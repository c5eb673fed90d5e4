from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from genexp.laurent import (
    ONE,
    T,
    T_INV,
    ZERO,
    LaurentPolynomial,
    one_minus_t_set,
    t_set_minus_one,
)

small_polys = st.dictionaries(
    st.integers(min_value=-5, max_value=5),
    st.integers(min_value=-4, max_value=4),
    max_size=6,
).map(LaurentPolynomial)


def test_add_examples():
    assert (T - ONE) + ONE == T
    assert ZERO + (T - ONE) == T - ONE
    assert (T + T**2) + (T**2 + T**3) == LaurentPolynomial({1: 1, 2: 2, 3: 1})


def test_mul_examples():
    assert T * T_INV == ONE
    assert (ONE - T_INV) * T == T - ONE
    assert (ONE - T_INV) * (ONE - LaurentPolynomial.monomial(-2)) == LaurentPolynomial(
        {0: 1, -1: -1, -2: -1, -3: 1}
    )


def test_canonical_form_drops_zeros():
    p = LaurentPolynomial({3: 0, 1: 2, 0: 0})
    assert p == LaurentPolynomial({1: 2})
    assert (T - T) == ZERO
    assert not ZERO
    assert ZERO.terms() == []


def test_int_coercion():
    assert T - 1 == T - ONE
    assert 2 * T == LaurentPolynomial({1: 2})
    assert 1 + T == T + ONE


def test_evaluate_at_one():
    assert (T + T**2).evaluate_at_one() == 2
    assert ZERO.evaluate_at_one() == 0
    vanishing = LaurentPolynomial.monomial(16) * one_minus_t_set((-3, -2, -1))
    assert vanishing.evaluate_at_one() == 0


def test_one_minus_t_set_conventions():
    assert one_minus_t_set(()) == ONE
    assert one_minus_t_set((0,)) == ZERO
    expected = (ONE - LaurentPolynomial.monomial(-3)) * (
        ONE - LaurentPolynomial.monomial(-2)
    ) * (ONE - T_INV)
    assert one_minus_t_set((-3, -2, -1)) == expected


def test_t_set_minus_one_conventions():
    assert t_set_minus_one(()) == ONE
    assert t_set_minus_one((1,)) == T - ONE
    expected = (T**3 - ONE) * (T**6 - ONE) * (T**7 - ONE)
    assert t_set_minus_one((3, 6, 7)) == expected


def test_t_set_minus_one_telescopes():
    # Sum over all subsets of a positive height set gives the single monomial
    # t^(sum of heights); this is what the fundamental pairing relies on.
    from itertools import combinations

    heights = (3, 6, 7)
    total = ZERO
    for r in range(len(heights) + 1):
        for subset in combinations(heights, r):
            total = total + t_set_minus_one(subset)
    assert total == LaurentPolynomial.monomial(sum(heights))


@given(small_polys, small_polys, small_polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + ZERO == p
    assert p * ONE == p


@given(
    st.sets(st.integers(min_value=-6, max_value=6), max_size=5),
    st.integers(min_value=0, max_value=6),
)
def test_one_minus_t_set_vanishes_with_nonnegative(s, extra):
    assert one_minus_t_set(tuple(s) + (extra,)) == ZERO


@given(
    st.lists(st.integers(min_value=-6, max_value=-1), max_size=5),
    st.fractions(min_value=Fraction(-3), max_value=Fraction(3)).filter(lambda r: r != 0),
)
def test_one_minus_t_set_evaluates_to_direct_product(s, r):
    product = Fraction(1)
    for exponent in s:
        product *= 1 - r ** min(0, exponent)
    assert one_minus_t_set(s).evaluate(r) == product


def test_rendering_ascending():
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(T - ONE) == "-1 + t"
    assert str(T + T**2) == "t + t^2"
    assert str(LaurentPolynomial({-1: 1, 2: -3})) == "t^-1 - 3t^2"


def test_json_round_trip():
    p = LaurentPolynomial({-2: 3, 0: -1, 5: 7})
    assert p.to_json_dict() == {"-2": 3, "0": -1, "5": 7}
    assert LaurentPolynomial.from_json_dict(p.to_json_dict()) == p


def test_degree_valuation_and_hash():
    p = T + T**3
    assert p.degree() == 3 and p.valuation() == 1
    assert ZERO.degree() is None and ZERO.valuation() is None
    assert hash(T - 1) == hash(LaurentPolynomial({1: 1, 0: -1}))


def test_immutable():
    with pytest.raises(AttributeError):
        T._coeffs = {}
    with pytest.raises(ValueError):
        T**-1
