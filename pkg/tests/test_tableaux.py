from collections import Counter
from itertools import combinations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from genexp.tableaux import (
    StandardTableau,
    co,
    co_inverse,
    compositions,
    conjugate,
    is_partition,
    kostka_number,
    kostka_number_strip,
    parse_partition,
    partitions,
    phi_set,
    phi_weight,
    schur_fundamental_expansion,
    ssyt_enumerate,
    syt_enumerate,
)
from genexp.weights import Weight

# The two shape-(4,3,1) tableaux with equal descent sets.
T1 = StandardTableau([[1, 2, 6, 8], [3, 4, 7], [5]])
T2 = StandardTableau([[1, 2, 4, 6], [3, 7, 8], [5]])


def hook_length_count(shape):
    """Independent oracle: number of standard tableaux by the hook-length formula."""
    cols = conjugate(shape)
    product = 1
    for i, row in enumerate(shape):
        for j in range(row):
            product *= (row - j) + (cols[j] - i) - 1
    return factorial(sum(shape)) // product


def weyl_dimension(shape, nvars):
    """Independent oracle: dimension of the GL(nvars) irreducible, by hook content."""
    cols = conjugate(shape)
    numerator, denominator = 1, 1
    for i, row in enumerate(shape):
        for j in range(row):
            numerator *= nvars + j - i
            denominator *= (row - j) + (cols[j] - i) - 1
    return numerator // denominator


# -- partitions and compositions ----------------------------------------------


def test_partitions_enumeration():
    assert partitions(0) == [()]
    assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(partitions(7)) == 15
    assert len(partitions(8)) == 22


def test_parse_partition():
    assert parse_partition("4,3,1") == (4, 3, 1)
    for bad in ("", "3,4", "0", "a,b", "2,-1"):
        with pytest.raises(ValueError):
            parse_partition(bad)


def test_conjugate():
    assert conjugate((4, 3, 1)) == (3, 2, 2, 1)
    assert conjugate((8,)) == (1,) * 8
    for p in partitions(7):
        assert conjugate(conjugate(p)) == p
        assert is_partition(conjugate(p))


def test_compositions_count():
    # 2^(m-1) compositions of m
    for m in range(1, 7):
        assert len(compositions(m)) == 2 ** (m - 1)


# -- subset encodings ----------------------------------------------------------


def test_co_examples():
    assert co({2, 4, 6}, 7) == (2, 2, 2, 2)
    assert co(set(), 7) == (8,)
    with pytest.raises(ValueError):
        co({8}, 7)


def test_co_round_trip():
    for size in range(1, 8):
        for r in range(size + 1):
            for subset in combinations(range(1, size + 1), r):
                assert co_inverse(co(subset, size)) == frozenset(subset)
    for m in range(1, 7):
        for comp in compositions(m):
            assert co(co_inverse(comp), m - 1) == comp


def test_phi_set():
    assert phi_set({2, 4, 6}, 7) == frozenset({1, 3, 5, 7})
    assert phi_set(set(), 3) == frozenset({1, 2, 3})
    assert phi_set({1, 2, 3}, 3) == frozenset()


def test_phi_set_involution_and_order_reversal():
    rank = 6
    subsets = [
        frozenset(s)
        for r in range(rank + 1)
        for s in combinations(range(1, rank + 1), r)
    ]
    for a in subsets:
        assert phi_set(phi_set(a, rank), rank) == a
    for a in subsets[:20]:
        for b in subsets:
            if a <= b:
                assert phi_set(b, rank) <= phi_set(a, rank)


def test_phi_weight():
    assert phi_weight(Weight.zero(3)) == (1, 1, 1, 1)
    assert phi_weight(Weight((1, 0, -1))) == (2, 1)
    assert phi_weight(Weight.parse("0,2,0,1,0,0,-1,-1,-1")) == (1, 3, 1, 2, 1, 1)
    with pytest.raises(ValueError):
        phi_weight(Weight((-1, 1)))  # -1 not rightmost


# -- standard tableaux -----------------------------------------------------------


def test_standard_tableau_validation():
    with pytest.raises(ValueError):
        StandardTableau([[1, 3], [2, 4], [5, 6, 7]])  # shape not a partition
    with pytest.raises(ValueError):
        StandardTableau([[1, 1], [2]])  # not a bijection
    with pytest.raises(ValueError):
        StandardTableau([[2, 1], [3]])  # row decreasing
    with pytest.raises(ValueError):
        StandardTableau([[2, 3], [1]])  # column decreasing
    StandardTableau([[1, 3], [2], [4]])  # valid


def test_syt_counts_match_hook_length_oracle():
    assert len(syt_enumerate((2, 1))) == 2 == hook_length_count((2, 1))
    assert len(syt_enumerate((5,))) == 1
    assert len(syt_enumerate((4, 3, 1))) == 70 == hook_length_count((4, 3, 1))
    for m in range(1, 8):
        for shape in partitions(m):
            assert len(syt_enumerate(shape)) == hook_length_count(shape)


def test_syt_order_is_deterministic_lex():
    tableaux = syt_enumerate((2, 1))
    assert [t.to_rows() for t in tableaux] == [[[1, 2], [3]], [[1, 3], [2]]]


def test_descents():
    assert T1.descent_set() == frozenset({2, 4, 6})
    assert T2.descent_set() == frozenset({2, 4, 6})
    single_row = StandardTableau([list(range(1, 6))])
    assert single_row.descent_set() == frozenset()


def test_tableau_height():
    assert T1.height() == 16
    for m in range(2, 9):
        row = StandardTableau([list(range(1, m + 1))])
        assert row.height() == m * (m - 1) // 2
        column = StandardTableau([[i] for i in range(1, m + 1)])
        assert column.height() == 0


def test_reading_word_and_charge():
    assert T1.reading_word() == (8, 6, 2, 1, 7, 4, 3, 5)
    assert T1.charge() == 16
    assert T2.charge() == 16
    for m in range(2, 9):
        assert StandardTableau([[i] for i in range(1, m + 1)]).charge() == 0
        assert StandardTableau([list(range(1, m + 1))]).charge() == m * (m - 1) // 2


def test_height_equals_charge_exhaustive():
    for m in range(1, 8):
        for shape in partitions(m):
            for t in syt_enumerate(shape):
                assert t.height() == t.charge(), t.to_rows()


# -- Kostka numbers ---------------------------------------------------------------


def test_kostka_examples():
    assert kostka_number((2, 1), (1, 1, 1)) == 2
    assert kostka_number((2, 1), (2, 1)) == 1
    for p in partitions(6):
        assert kostka_number(p, p) == 1
    with pytest.raises(ValueError):
        kostka_number((2, 1), (1, 1))


def test_kostka_content_permutation_invariance():
    assert kostka_number((3, 2), (1, 2, 0, 2)) == kostka_number((3, 2), (2, 2, 1, 0))
    assert kostka_number((2, 2), (0, 2, 2)) == kostka_number((2, 2), (2, 2))


def test_kostka_strip_agrees_with_enumeration():
    for m in range(1, 7):
        for shape in partitions(m):
            for content in compositions(m):
                assert kostka_number_strip(shape, content) == kostka_number(shape, content)


def test_syt_count_is_kostka_of_standard_content():
    for m in range(1, 8):
        for shape in partitions(m):
            assert len(syt_enumerate(shape)) == kostka_number(shape, (1,) * m)


def test_kostka_sums_to_weyl_dimension():
    from genexp.weights import weak_compositions

    for m in range(2, 6):
        for shape in partitions(m):
            total = sum(
                kostka_number(shape, content)
                for content in weak_compositions(m, m)
            )
            assert total == weyl_dimension(shape, m)


# -- Gessel expansion ---------------------------------------------------------------


def test_schur_fundamental_expansion_examples():
    assert schur_fundamental_expansion((2, 1)) == Counter({(1, 2): 1, (2, 1): 1})
    for m in range(1, 7):
        assert schur_fundamental_expansion((m,)) == Counter({(m,): 1})
    expansion = schur_fundamental_expansion((4, 3, 1))
    assert expansion[(2, 2, 2, 2)] >= 2
    assert sum(expansion.values()) == 70


def _monomial_qsym_poly(comp, nvars):
    """Exponent-vector expansion of the quasisymmetric monomial in nvars variables."""
    counter = Counter()
    for positions in combinations(range(nvars), len(comp)):
        vector = [0] * nvars
        for position, part in zip(positions, comp):
            vector[position] = part
        counter[tuple(vector)] += 1
    return counter


def _fundamental_qsym_poly(comp, nvars):
    """Sum of monomials over all refinements of the composition."""
    total_size = sum(comp)
    base = co_inverse(comp)
    counter = Counter()
    for r in range(total_size):
        for subset in combinations(range(1, total_size), r):
            if base <= frozenset(subset):
                counter += _monomial_qsym_poly(co(subset, total_size - 1), nvars)
    return counter


def _schur_poly_by_ssyt(shape, nvars):
    """Raw semistandard monomial summation; coefficient of x^c is the Kostka number."""
    from genexp.weights import weak_compositions

    counter = Counter()
    for content in weak_compositions(sum(shape), nvars):
        count = kostka_number(shape, content)
        if count:
            counter[content] = count
    return counter


def test_gessel_expansion_matches_schur_polynomial():
    for m in range(2, 6):
        nvars = m
        for shape in partitions(m):
            lhs = Counter()
            for comp, mult in schur_fundamental_expansion(shape).items():
                fundamental = _fundamental_qsym_poly(comp, nvars)
                for vector, coefficient in fundamental.items():
                    lhs[vector] += mult * coefficient
            assert +lhs == +_schur_poly_by_ssyt(shape, nvars), shape


# -- box complementarity -----------------------------------------------------------


def test_box_complementarity():
    # For a partition in an (n-N) x N box, the horizontal and vertical edge
    # labels split [n] into complementary subsets.
    for n in range(2, 8):
        for N in range(1, n):
            box_rows = n - N
            for inner in partitions_in_box(box_rows, N):
                padded = tuple(inner) + (0,) * (box_rows - len(inner))
                cols = conjugate(inner) if inner else ()
                cols = tuple(cols) + (0,) * (N - len(cols))
                horizontal = {N + i - padded[i - 1] for i in range(1, box_rows + 1)}
                vertical = {cols[j - 1] + N + 1 - j for j in range(1, N + 1)}
                assert horizontal | vertical == set(range(1, n + 1))
                assert not horizontal & vertical


def partitions_in_box(rows, width):
    result = [()]
    for p in partitions_bounded(rows, width):
        result.append(p)
    return result


def partitions_bounded(rows, width):
    if rows == 0 or width == 0:
        return
    for first in range(width, 0, -1):
        yield (first,)
        for rest in partitions_bounded(rows - 1, first):
            yield (first,) + rest


@given(st.integers(min_value=1, max_value=8))
def test_ssyt_empty_and_full_content(m):
    assert kostka_number((m,), (m,)) == 1
    assert kostka_number((1,) * m, (1,) * m) == 1
    # single column admits no repeated entries
    if m >= 2:
        assert kostka_number((1,) * m, (m,)) == 0
