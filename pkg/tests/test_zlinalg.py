import itertools
import math

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form

from specht.errors import DomainError
from specht.zlinalg import (
    AbelianInvariants,
    determinant,
    equal_up_to_unit,
    identity,
    inverse_unimodular,
    kernel_mod,
    matmul,
    normalize_generator,
    snf,
    transpose,
    unit_between,
    vector_order_mod,
)


def matrices(max_rows=5, max_cols=5, bound=12):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(-bound, bound), min_size=c, max_size=c), min_size=r, max_size=r
            )
        )
    )


def sympy_diagonal(A):
    D = smith_normal_form(sympy.Matrix(A), domain=sympy.ZZ)
    return [abs(int(D[i, i])) for i in range(min(D.shape))]


# ---------------------------------------------------------------------------
# Smith normal form


@settings(max_examples=500, deadline=None)
@given(matrices())
def test_snf_matches_sympy_and_certificates(A):
    sf = snf(A)
    assert matmul(matmul(sf.U, A), sf.V) == sf.D
    assert abs(determinant(sf.U)) == 1
    assert abs(determinant(sf.V)) == 1
    diag = sf.diagonal
    assert all(d >= 0 for d in diag)
    nonzero = [d for d in diag if d]
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    assert diag == sympy_diagonal(A)
    for i, row in enumerate(sf.D):
        for j, v in enumerate(row):
            if i != j:
                assert v == 0


def test_snf_known_example():
    A = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    assert snf(A).diagonal == [2, 6, 12]


def test_snf_zero_and_unit():
    assert snf([[0, 0], [0, 0]]).diagonal == [0, 0]
    assert snf([[1]]).diagonal == [1]
    assert snf([[0, 5]]).rank == 1


def test_snf_rejects_ragged():
    with pytest.raises(DomainError):
        snf([[1, 2], [3]])


@settings(max_examples=100)
@given(matrices(max_rows=4, max_cols=4, bound=6))
def test_unimodular_inverse(A):
    U = snf(A).U
    assert matmul(U, inverse_unimodular(U)) == identity(len(U))


def test_determinant_and_transpose():
    A = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
    assert determinant(A) == int(sympy.Matrix(A).det())
    assert transpose([[1, 2, 3]]) == [[1], [2], [3]]


# ---------------------------------------------------------------------------
# Abelian groups


def test_invariants_from_orders():
    assert AbelianInvariants.from_orders([2, 3]).factors == (6,)
    assert AbelianInvariants.from_orders([4, 2, 3]).factors == (2, 12)
    assert str(AbelianInvariants.from_orders([])) == "0"
    assert str(AbelianInvariants((2, 4), 1)) == "Z/2 x Z/4 x Z"


def test_invariants_reject_broken_chain():
    with pytest.raises(DomainError):
        AbelianInvariants((4, 6))


def test_invariant_queries():
    group = AbelianInvariants((2, 12))
    assert group.order == 24
    assert group.elementary_divisors() == [2, 3, 4]
    assert group.p_rank(2) == 2
    assert group.p_rank(3) == 1
    assert AbelianInvariants((), 2).order is None


@settings(max_examples=100)
@given(st.lists(st.integers(1, 30), max_size=5))
def test_invariants_from_orders_preserve_order(orders):
    assert AbelianInvariants.from_orders(orders).order == math.prod(orders)


# ---------------------------------------------------------------------------
# Kernels modulo m


def brute_kernel(A, m, r):
    cols = len(A[0]) if A else 0
    return {
        x
        for x in itertools.product(range(m), repeat=r)
        if all(sum(x[i] * A[i][j] for i in range(r)) % m == 0 for j in range(cols))
    }


def span_mod(gens, m, r):
    seen = {tuple([0] * r)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = tuple((a + b) % m for a, b in zip(v, g))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


@settings(max_examples=200, deadline=None)
@given(
    st.integers(2, 6),
    st.integers(1, 4).flatmap(
        lambda r: st.lists(st.lists(st.integers(-6, 6), min_size=r, max_size=r), min_size=0, max_size=3)
    ),
)
def test_kernel_mod_matches_brute_force(m, cols):
    r = len(cols[0]) if cols else 2
    A = [[c[i] for c in cols] for i in range(r)] if cols else []
    ker = kernel_mod(A, m, rows=r)
    expected = brute_kernel(A, m, r)
    assert ker.invariants.order == len(expected)
    for g, f in zip(ker.generators, ker.invariants.factors):
        assert g in expected
        assert vector_order_mod(g, m) == f
    assert span_mod(ker.generators, m, r) == expected


def test_kernel_over_integers():
    ker = kernel_mod([[1, 2], [2, 4]], 0)
    assert ker.invariants.free_rank == 1
    (g,) = ker.generators
    assert matmul([list(g)], [[1, 2], [2, 4]]) == [[0, 0]]


def test_kernel_with_no_columns():
    ker = kernel_mod([], 4, rows=2)
    assert ker.invariants.factors == (4, 4)


def test_kernel_rejects_negative_modulus():
    with pytest.raises(DomainError):
        kernel_mod([[1]], -3)


# ---------------------------------------------------------------------------
# Generators up to units


def test_normalize_generator_is_least_unit_multiple():
    assert normalize_generator((3, 1), 4) == (1, 3)
    # leading coordinate 2 is not a unit mod 4; 3*(2,1) = (2,3) is larger than (2,1)
    assert normalize_generator((2, 3), 4) == (2, 1)
    assert normalize_generator((0, 0), 5) == (0, 0)


@settings(max_examples=200)
@given(st.integers(2, 12), st.lists(st.integers(0, 50), min_size=1, max_size=4), st.integers(1, 50))
def test_normalize_generator_is_invariant_under_units(m, x, u):
    if math.gcd(u, m) != 1:
        u = 1
    y = [u * c for c in x]
    assert normalize_generator(x, m) == normalize_generator(y, m)
    assert equal_up_to_unit(x, y, m)
    w = unit_between(x, y, m)
    assert w is not None and all((w * a - b) % m == 0 for a, b in zip(x, y))


def test_unit_between_none():
    assert unit_between((1, 0), (2, 0), 4) is None
    assert not equal_up_to_unit((1, 0), (2, 0), 4)


def test_vector_order():
    assert vector_order_mod((2, 4), 12) == 6
    assert vector_order_mod((0, 0), 7) == 1
