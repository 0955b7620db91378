import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specht.combinatorics import (
    FormalPermSum,
    Partition,
    Permutation,
    Tableau,
    Tabloid,
    canonical_tableau,
    column_stabilizer,
    dominates,
    hook_length_count,
    is_standard,
    partitions,
    permutation_between,
    row_stabilizer,
    standard_tableaux,
    transpose_partition,
)
from specht.errors import DomainError, GroupSizeError, NotAPartition, ParseError

from strategies import partitions_upto, permutations_of, shaped_tableaux

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


def test_partition_counts():
    assert [len(partitions(n)) for n in range(13)] == PARTITION_COUNTS


def test_partition_parse_and_exponents():
    assert Partition.parse("3,2,2") == Partition((3, 2, 2))
    assert Partition.parse("2,1^4") == Partition((2, 1, 1, 1, 1))
    assert str(Partition.parse("(4,4)")) == "4,4"


@pytest.mark.parametrize("text", ["3,x", "3,,2", "a"])
def test_partition_parse_rejects_garbage(text):
    with pytest.raises(ParseError):
        Partition.parse(text)


def test_partition_rejects_increasing_parts():
    with pytest.raises(NotAPartition):
        Partition((2, 3))


def test_conjugate_small():
    assert Partition((3, 2, 2)).conjugate == Partition((3, 3, 1))
    assert Partition((4, 4)).conjugate == Partition((2, 2, 2, 2))
    assert Partition((3, 2, 2)).col(1) == 3
    assert Partition((3, 2, 2)).col(4) == 0


@pytest.mark.parametrize("n", range(13))
def test_transpose_is_an_involution(n):
    for lam in partitions(n):
        assert transpose_partition(transpose_partition(lam)) == lam


@pytest.mark.parametrize("n", range(1, 8))
def test_hook_length_formula_counts_standard_tableaux(n):
    for lam in partitions(n):
        tabs = standard_tableaux(lam)
        assert len(tabs) == hook_length_count(lam)
        assert all(is_standard(t) for t in tabs)


@pytest.mark.parametrize("n", range(1, 8))
def test_sum_of_squares_of_dimensions(n):
    assert sum(hook_length_count(lam) ** 2 for lam in partitions(n)) == math.factorial(n)


def test_dominance():
    assert dominates(Partition((3, 1)), Partition((2, 2)))
    assert not dominates(Partition((2, 2)), Partition((3, 1)))
    assert not dominates(Partition((3, 1, 1, 1)), Partition((2, 2, 2)))
    assert not dominates(Partition((2, 2, 2)), Partition((3, 1, 1, 1)))


def test_permutation_product_applies_left_factor_first():
    s = Permutation.parse(3, "(12)")
    t = Permutation.parse(3, "(23)")
    # 1 -> 2 under s, then 2 -> 3 under t
    assert (s * t)(1) == 3
    assert s * t == Permutation.parse(3, "(132)")


def test_permutation_parse_forms_agree():
    assert Permutation.parse(5, "(2453)") == Permutation.parse(5, "(2,4,5,3)")
    assert str(Permutation.parse(5, "(2453)")) == "(2453)"
    assert Permutation.parse(4, "1").is_identity()
    with pytest.raises(ParseError):
        Permutation.parse(4, "(1a)")
    with pytest.raises(DomainError):
        Permutation.parse(4, "(15)")


@given(st.data())
def test_sign_is_multiplicative(data):
    n = data.draw(st.integers(1, 8))
    s = data.draw(permutations_of(n))
    t = data.draw(permutations_of(n))
    assert (s * t).sign == s.sign * t.sign
    assert (s * s.inverse()).is_identity()


def test_canonical_tableau_reads_down_columns():
    a = canonical_tableau(Partition((3, 2)))
    assert a.rows == ((1, 3, 5), (2, 4))
    assert a.columns == ((1, 2), (3, 4), (5,))
    assert a.transpose().rows == ((1, 2), (3, 4), (5,))


def test_tableau_parse_and_act():
    a = Tableau.parse("[1,3/2]")
    assert a.rows == ((1, 3), (2,))
    b = a.act(Permutation.parse(3, "(123)"))
    assert b.rows == ((2, 1), (3,))
    assert permutation_between(a, b) == Permutation.parse(3, "(123)")


def test_tabloid_row_word():
    t = Tabloid.parse("1211")
    assert t.shape == Partition((3, 1))
    assert t.rows() == ((1, 3, 4), (2,))
    assert t.act(Permutation.parse(4, "(23)")) == Tabloid.parse("1121")


@settings(max_examples=60)
@given(shaped_tableaux(max_n=6))
def test_stabilizer_orders(a):
    lam = a.shape
    assert len(row_stabilizer(a)) == math.prod(math.factorial(p) for p in lam.parts)
    assert len(column_stabilizer(a)) == math.prod(math.factorial(c) for c in lam.conjugate.parts)


@settings(max_examples=60)
@given(st.data())
def test_column_stabilizer_is_stable_under_its_own_elements(data):
    a = data.draw(shaped_tableaux(max_n=6))
    group = column_stabilizer(a)
    kappa = data.draw(st.sampled_from(group))
    assert set(column_stabilizer(a.act(kappa))) == set(group)


@settings(max_examples=40)
@given(st.data())
def test_column_stabilizer_conjugates_under_relabelling(data):
    a = data.draw(shaped_tableaux(max_n=6))
    sigma = data.draw(permutations_of(a.n))
    conj = {sigma.inverse() * k * sigma for k in column_stabilizer(a)}
    assert set(column_stabilizer(a.act(sigma))) == conj


def test_group_size_guard():
    a = canonical_tableau(Partition((1,) * 9))
    with pytest.raises(GroupSizeError):
        column_stabilizer(a, limit=1000)


def test_formal_sums():
    n = 3
    s = Permutation.parse(n, "(12)")
    x = FormalPermSum.identity(n) - FormalPermSum.of((1, s))
    sq = x * x
    assert sq.terms == {Permutation.identity(n): 2, s: -2}
    assert len(x + (-x)) == 0


@given(partitions_upto(max_n=9))
def test_conjugation_swaps_rows_and_columns(lam):
    assert lam.conjugate.parts == tuple(lam.col(j) for j in range(1, lam.num_columns + 1))
    assert lam.conjugate.n == lam.n
