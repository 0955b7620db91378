import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specht.combinatorics import FormalPermSum, Partition, Permutation, canonical_tableau, partitions
from specht.errors import DomainError, GroupSizeError, RelationViolation
from specht.homsolver import (
    Morphism,
    check_relations,
    hom_group,
    morphism_from_image,
    morphism_order,
    specht_relation_words,
    tabloid_index,
    tabloid_words,
)
from specht.lattices import FreeElement, garnir_cosets, polytabloid, specht_dimension, straighten
from specht.zlinalg import AbelianInvariants

from strategies import permutations_of

P = Partition.parse

# source, target, reduced modulus, invariant factors
VERTICAL_EXAMPLES = [
    ("3,3", "2,2,1,1", 4, (4,)),
    ("3,2,2", "3,1,1,1,1", 6, (6,)),
    ("3,3,1,1", "2,2,1,1,1,1", 6, (6,)),
    ("4,4", "3,3,1,1", 5, (5,)),
    ("3,3,2", "2,2,2,1,1", 5, (5,)),
    ("3,3,1,1", "2,2,2,2", 3, (3,)),
    ("4,3", "2,2,2,1", 4, (4,)),
    ("4,4", "2,2,2,2", 4, (4,)),
    ("2,2,2,1,1", "1,1,1,1,1,1,1,1", 8, ()),
]


@pytest.mark.parametrize("lam,mu,m,factors", VERTICAL_EXAMPLES)
def test_vertical_hom_groups(lam, mu, m, factors):
    lam, mu = P(lam), P(mu)
    full = hom_group(lam, mu, math.factorial(lam.n))
    reduced = hom_group(lam, mu, m)
    assert full.invariants.factors == reduced.invariants.factors == factors
    assert full.invariants.free_rank == 0
    for group in (full, reduced):
        assert len(group.generators) == len(factors)
        for f, order in zip(group.generators, factors):
            check_relations(lam, mu, group.modulus, f.generator_image())
            assert morphism_order(f) == order


def test_hom_322_to_31111_splits_as_two_and_three():
    group = hom_group(P("3,2,2"), P("3,1,1,1,1"), math.factorial(7))
    assert group.invariants.elementary_divisors() == [2, 3]


def test_hom_trivial_to_trivial_mod_five():
    group = hom_group(P("3"), P("3"), 5)
    assert str(group) == "Z/5"
    (f,) = group.generators
    assert f.matrix == ((1,),)


@pytest.mark.parametrize("lam", ["2,1", "2,2", "3,2", "2,2,1"])
def test_endomorphisms_contain_the_identity(lam):
    lam = P(lam)
    m = 7
    group = hom_group(lam, lam, m)
    assert group.invariants.factors == (m,)
    (f,) = group.generators
    d = specht_dimension(lam)
    u = f.matrix[0][0]
    assert f.matrix == tuple(tuple(u if i == j else 0 for j in range(d)) for i in range(d))


def test_identity_from_image():
    lam = P("3,2")
    x = straighten(canonical_tableau(lam))
    f = morphism_from_image(lam, lam, 6, x)
    d = specht_dimension(lam)
    assert f.matrix == tuple(tuple(int(i == j) for j in range(d)) for i in range(d))
    assert morphism_order(f) == 6


def test_zero_image_gives_zero_morphism():
    lam, mu = P("3,2"), P("2,2,1")
    f = morphism_from_image(lam, mu, 4, [0] * specht_dimension(mu))
    assert f.is_zero()
    assert morphism_order(f) == 1


def test_relation_violation_names_the_word():
    lam = P("2,1")
    with pytest.raises(RelationViolation) as info:
        morphism_from_image(lam, P("3"), 5, [1])
    assert info.value.word is not None


def test_relation_words_small_shapes():
    # one row: no column relations, and each Garnir word is 1 - (j, j+1)
    ident = Permutation.identity(3)
    assert specht_relation_words(P("3")) == [
        FormalPermSum({ident: 1, Permutation.transposition(3, 1, 2): -1}),
        FormalPermSum({ident: 1, Permutation.transposition(3, 2, 3): -1}),
    ]
    (w,) = specht_relation_words(P("1,1"))
    assert w == FormalPermSum({Permutation.identity(2): 1, Permutation.transposition(2, 1, 2): 1})
    words = specht_relation_words(P("2,1"))
    assert len(words) == 2
    assert sorted(len(w) for w in words) == [2, 3]


def test_minimal_relations_generate_the_same_hom():
    lam, mu = P("2,2,2"), P("2,2,1,1")
    assert len(specht_relation_words(lam, minimal=True)) < len(specht_relation_words(lam))
    x = hom_group(lam, mu, 12).generators
    for f in x:
        check_relations(lam, mu, 12, f.generator_image(), words=specht_relation_words(lam, minimal=True))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_garnir_element_translates_with_the_tableau(data):
    lam = data.draw(st.sampled_from([q for n in range(3, 7) for q in partitions(n) if q.num_columns >= 2]))
    tau = data.draw(permutations_of(lam.n))
    a = canonical_tableau(lam)
    b = a.act(tau)
    p = data.draw(st.integers(1, lam.num_columns - 1))
    t = data.draw(st.integers(1, lam.col(p + 1)))
    s = lam.col(p) + 1 - t
    xi, eta = b.column(p)[-s:], b.column(p + 1)[:t]

    def garnir_element(base, xs, es):
        acc = FreeElement.zero(lam)
        for sigma, eps in garnir_cosets(xs, es, lam.n):
            acc = acc + base.act(sigma).scale(eps)
        return acc

    pre = tau.inverse()
    lhs = garnir_element(polytabloid(b), xi, eta)
    rhs = garnir_element(polytabloid(a), [pre(x) for x in xi], [pre(y) for y in eta]).act(tau)
    assert lhs == rhs
    assert lhs.is_zero()


def test_tabloid_words_are_sorted_and_indexed():
    words = tabloid_words(P("2,1"))
    assert words == ((1, 1, 2), (1, 2, 1), (2, 1, 1))
    assert tabloid_index(P("2,1"))[(1, 2, 1)] == 1


def test_hom_into_tabloid_module_of_trivial_shape():
    # S^lam -> M^(n) is nonzero only for lam = (n)
    for lam in partitions(4):
        group = hom_group(lam, P("4"), 3, "tabloid")
        assert group.invariants.order == (3 if lam == P("4") else 1)


def test_alternated_target():
    # M^(1^n) twisted by the sign contains the sign representation
    group = hom_group(P("1,1,1"), P("3"), 5, "alternated")
    assert group.invariants == AbelianInvariants((5,))


def test_hom_group_guards():
    with pytest.raises(DomainError):
        hom_group(P("2,1"), P("2,2"), 5)
    with pytest.raises(DomainError):
        hom_group(P("2,1"), P("2,1"), 1)
    with pytest.raises(DomainError):
        hom_group(P("2,1"), P("2,1"), 5, "bogus")
    with pytest.raises(GroupSizeError):
        hom_group(P("2,1"), P("2,1"), 5, max_dimension=1)


def test_morphism_arithmetic():
    (f,) = hom_group(P("3,3"), P("2,2,1,1"), 4).generators
    assert (f + f).scale(2).is_zero()
    assert (f + (-f)).is_zero()
    assert morphism_order(f + f) == 2
    with pytest.raises(DomainError):
        _ = f + Morphism(f.source, f.target, 8, f.matrix)


def test_apply_matches_generator_image():
    (f,) = hom_group(P("3,3"), P("2,2,1,1"), 4).generators
    v = straighten(canonical_tableau(P("3,3")))
    assert f.apply(v) == list(f.generator_image())
