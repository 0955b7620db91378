import itertools
import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from specht.combinatorics import Partition, Permutation, Tableau, Tabloid, canonical_tableau, is_standard, partitions, tabloid_of
from specht.errors import DomainError, NotInSpechtLattice
from specht.lattices import (
    FreeElement,
    SpechtVector,
    apply_word,
    column_alternate,
    eval_garnir_B,
    eval_garnir_Bp,
    eval_garnir_C,
    eval_garnir_C_expansion,
    eval_garnir_Cp,
    eval_garnir_Cp_expansion,
    garnir_cosets,
    garnir_word,
    inner_product,
    multitransposition,
    multitranspose,
    polytabloid,
    primed_expansion_weight,
    specht_basis,
    specht_dimension,
    standard_basis,
    straighten,
    tabloid_coefficient,
)
from specht.combinatorics import hook_length_count

from strategies import permutations_of, shaped_tableaux, tableaux_of


def transposition(n, x, y):
    return multitransposition(n, [x], [y])


# ---------------------------------------------------------------------------
# Garnir configurations: a tableau, columns p < q, d >= 1, and subsets xi of
# column p and eta of column q with s + t = (length of column p) + 1 - d.


@st.composite
def garnir_setups(draw, max_n=7, d=None):
    lam = draw(st.sampled_from([lam for n in range(2, max_n + 1) for lam in partitions(n) if lam.num_columns >= 2]))
    a = draw(tableaux_of(lam))
    p = draw(st.integers(1, lam.num_columns - 1))
    q = draw(st.integers(p + 1, lam.num_columns))
    cp, cq = lam.col(p), lam.col(q)
    choices = [
        (dd, s, cp + 1 - dd - s)
        for dd in range(1, cp + 2)
        for s in range(0, cp + 1)
        if 0 <= cp + 1 - dd - s <= cq and s + (cp + 1 - dd - s) >= 0 and cp - s >= cp + 1 - dd - s
        and (d is None or dd == d)
    ]
    assume(choices)
    dd, s, t = draw(st.sampled_from(choices))
    col_p, col_q = list(a.column(p)), list(a.column(q))
    xi = sorted(draw(st.permutations(col_p))[:s])
    eta = sorted(draw(st.permutations(col_q))[:t])
    xibar = [x for x in col_p if x not in xi]
    shuffled = draw(st.permutations(xibar))
    xibar1 = sorted(shuffled[:t])
    return dict(a=a, p=p, q=q, d=dd, xi=xi, eta=eta, xibar=xibar, xibar1=xibar1)


# ---------------------------------------------------------------------------
# Elements and polytabloids


def test_polytabloid_of_two_row_shape():
    a = Tableau.parse("1,3/2")
    x = polytabloid(a)
    assert x.terms == {(1, 2, 1): 1, (2, 1, 1): -1}
    assert inner_product(FreeElement.of_tabloid(Tabloid.parse("121")), x) == 1


def test_inner_product_of_tabloids():
    t, u = Tabloid.parse("1122"), Tabloid.parse("1212")
    assert inner_product(FreeElement.of_tabloid(t), FreeElement.of_tabloid(t)) == 1
    assert inner_product(FreeElement.of_tabloid(t), FreeElement.of_tabloid(u)) == 0


def test_inner_product_of_tabloid_with_its_polytabloid_on_2_2():
    for a in standard_basis(Partition((2, 2))):
        x = polytabloid(a)
        assert inner_product(FreeElement.of_tabloid(tabloid_of(a)), x) == 1


@settings(max_examples=80)
@given(st.data())
def test_polytabloid_is_equivariant(data):
    a = data.draw(shaped_tableaux(max_n=6))
    sigma = data.draw(permutations_of(a.n))
    assert polytabloid(a).act(sigma) == polytabloid(a.act(sigma))


@settings(max_examples=60)
@given(st.data())
def test_polytabloid_alternates_under_column_stabilizer(data):
    a = data.draw(shaped_tableaux(max_n=6))
    col = data.draw(st.sampled_from([c for c in a.columns if len(c) >= 2] or [None]))
    assume(col is not None)
    x, y = data.draw(st.permutations(col))[:2]
    assert polytabloid(a).act(transposition(a.n, x, y)) == polytabloid(a).scale(-1)


@settings(max_examples=60)
@given(shaped_tableaux(max_n=6))
def test_tabloid_coefficient_matches_expansion(a):
    x = polytabloid(a)
    for w, c in x.terms.items():
        assert tabloid_coefficient(a, w) == c


def test_free_element_text():
    x = polytabloid(Tableau.parse("1,3/2"))
    assert str(x) == "1 * 121\n-1 * 211"
    assert str(FreeElement.zero(Partition((2, 1)))) == "0"


def test_free_element_arithmetic():
    x = polytabloid(Tableau.parse("1,2/3,4"))
    assert (x - x).is_zero()
    assert x.scale(6).exact_divide(3) == x.scale(2)
    assert x.scale(7).reduce(5) == x.scale(2).reduce(5)
    with pytest.raises(DomainError):
        _ = x + FreeElement.zero(Partition((3, 1)))


def test_alternated_action_carries_the_sign():
    t = Tabloid.parse("121")
    x = FreeElement.of_tabloid(t, alternated=True)
    s = Permutation.parse(3, "(13)")
    assert x.act(s).terms == {(1, 2, 1): -1}


# ---------------------------------------------------------------------------
# The standard basis


@pytest.mark.parametrize("n", range(1, 8))
def test_standard_basis_is_unitriangular(n):
    for lam in partitions(n):
        basis = standard_basis(lam)
        words = [tabloid_of(b).word for b in basis]
        assert words == sorted(words)
        assert len(basis) == hook_length_count(lam) == specht_dimension(lam)
        for i, b in enumerate(basis):
            x = polytabloid(b)
            assert x.terms[words[i]] in (1, -1)
            for j in range(i):
                assert x.terms.get(words[j], 0) == 0


def test_standard_basis_order_for_2_1():
    assert [b.rows for b in standard_basis(Partition((2, 1)))] == [((1, 2), (3,)), ((1, 3), (2,))]


@pytest.mark.parametrize("lam", [(2, 2), (3, 2), (2, 2, 1), (3, 3, 1)])
def test_straighten_standard_is_unit_vector(lam):
    lam = Partition(lam)
    for i, b in enumerate(standard_basis(lam)):
        assert straighten(b) == SpechtVector.unit(lam, i)


@settings(max_examples=150, deadline=None)
@given(shaped_tableaux(max_n=7))
def test_straighten_methods_agree(a):
    oracle = straighten(a)
    assert straighten(a, method="garnir") == oracle
    rebuilt = FreeElement.zero(a.shape)
    for b, c in zip(standard_basis(a.shape), oracle.coords):
        rebuilt = rebuilt + polytabloid(b).scale(c)
    assert rebuilt == polytabloid(a)


@pytest.mark.parametrize("lam", [(3, 2), (2, 2, 2), (3, 2, 1), (4, 1, 1)])
def test_straighten_methods_agree_on_every_column_sorted_tableau(lam):
    lam = Partition(lam)
    checked = 0
    for values in itertools.permutations(range(1, lam.n + 1)):
        rows, pos = [], 0
        for part in lam.parts:
            rows.append(values[pos : pos + part])
            pos += part
        a = Tableau(lam, tuple(rows))
        if is_standard(a) or any(list(c) != sorted(c) for c in a.columns):
            continue
        assert straighten(a, method="garnir") == straighten(a)
        checked += 1
    assert checked > 0


def test_straighten_rejects_tabloid_outside_lattice():
    with pytest.raises(NotInSpechtLattice):
        straighten(FreeElement.of_tabloid(Tabloid.parse("121")))


def test_straighten_element_round_trip():
    lam = Partition((3, 2))
    x = polytabloid(Tableau.parse("5,1,4/2,3")).scale(3) + polytabloid(Tableau.parse("2,3,1/4,5"))
    v = straighten(x)
    assert v.to_element() == x


def test_straighten_unknown_method():
    with pytest.raises(DomainError):
        straighten(Tableau.parse("1,2/3"), method="magic")


def test_specht_basis_solve_is_integral():
    basis = specht_basis(Partition((3, 3)))
    assert len(basis) == 5


# ---------------------------------------------------------------------------
# Garnir relations


def test_garnir_word_for_2_1():
    # three cosets of the group on {1,2} times the group on {3}
    w = garnir_word(Partition((2, 1)), 1, 2, 1)
    assert len(w) == 3


@pytest.mark.parametrize("lam", [(2, 1), (2, 2), (3, 2), (2, 2, 1), (3, 3, 1), (2, 2, 2)])
def test_garnir_words_kill_the_reference_polytabloid(lam):
    lam = Partition(lam)
    a = canonical_tableau(lam)
    conj = lam.conjugate
    for p in range(1, lam.num_columns):
        for t in range(1, conj.part(p + 1) + 1):
            s = conj.part(p) + 1 - t
            w = garnir_word(lam, p, s, t)
            assert len(w) == math.comb(s + t, t)
            assert apply_word(polytabloid(a), w).is_zero()


def test_garnir_word_rejects_bad_parameters():
    with pytest.raises(DomainError):
        garnir_word(Partition((2, 1)), 1, 1, 1)
    with pytest.raises(DomainError):
        garnir_word(Partition((2, 1)), 2, 1, 1)


def test_garnir_cosets_identity_first():
    cosets = garnir_cosets([2, 3], [4], 4)
    assert cosets[0][0].is_identity()
    assert len(cosets) == 3


# ---------------------------------------------------------------------------
# Alternation


def test_column_alternate_singleton_is_identity():
    x = polytabloid(Tableau.parse("1,3/2"))
    assert column_alternate(x, [2]) == x


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_column_alternate_is_alternating(data):
    a = data.draw(shaped_tableaux(max_n=6, min_n=2))
    zeta = data.draw(st.lists(st.integers(1, a.n), min_size=2, max_size=4, unique=True))
    x, y = zeta[:2]
    z = column_alternate(polytabloid(a), zeta)
    assert z.act(transposition(a.n, x, y)) == z.scale(-1)


def test_column_alternate_over_full_column():
    a = Tableau.parse("1,3/2")
    assert column_alternate(FreeElement.of_tabloid(tabloid_of(a)), [1, 2]) == polytabloid(a)


# ---------------------------------------------------------------------------
# Multitranspositions


def test_multitranspose_trivial_cases():
    a = Tableau.parse("1,3,5/2,4")
    assert multitranspose(a, [], []) == polytabloid(a)
    assert multitranspose(a, [1], [3]) == polytabloid(a.act(transposition(5, 1, 3)))
    with pytest.raises(DomainError):
        multitranspose(a, [1, 2], [3])


@settings(max_examples=80)
@given(st.data())
def test_multitranspose_is_independent_of_pairing(data):
    a = data.draw(shaped_tableaux(max_n=7, min_columns=2))
    cols = a.columns
    p, q = sorted(data.draw(st.permutations(range(len(cols))))[:2])
    k = data.draw(st.integers(0, min(len(cols[p]), len(cols[q]))))
    phi = sorted(data.draw(st.permutations(cols[p]))[:k])
    psi = sorted(data.draw(st.permutations(cols[q]))[:k])
    pairing = data.draw(st.permutations(psi))
    assert multitranspose(a, phi, psi, pairing) == multitranspose(a, phi, psi)


# ---------------------------------------------------------------------------
# Garnir formula identities


@settings(max_examples=250, deadline=None)
@given(st.data())
def test_alternation_splits_off_one_element(data):
    a = data.draw(shaped_tableaux(max_n=7, min_columns=2))
    cols = a.columns
    p, q = sorted(data.draw(st.permutations(range(len(cols))))[:2])
    phi = data.draw(st.lists(st.sampled_from(cols[p]), min_size=1, unique=True))
    psi = data.draw(st.lists(st.sampled_from(cols[q]), min_size=1, unique=True))
    x, y = phi[0], psi[0]
    base = polytabloid(a)
    swapped = polytabloid(a.act(transposition(a.n, x, y)))
    union = phi + psi
    lhs = column_alternate(base, union)
    without_x = [z for z in union if z != x]
    without_y = [z for z in union if z != y]
    first = column_alternate(base, without_x).scale(len(phi)) - column_alternate(swapped, without_x).scale(len(psi))
    second = column_alternate(base, without_y).scale(len(psi)) - column_alternate(swapped, without_y).scale(len(phi))
    assert lhs == first == second


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_column_permutation_of_multitranspose(data):
    a = data.draw(shaped_tableaux(max_n=7, min_columns=2))
    cols = a.columns
    p, q = sorted(data.draw(st.permutations(range(len(cols))))[:2])
    k = data.draw(st.integers(0, min(len(cols[p]), len(cols[q]))))
    phi = sorted(data.draw(st.permutations(cols[p]))[:k])
    psi = sorted(data.draw(st.permutations(cols[q]))[:k])
    images = data.draw(st.permutations(cols[p]))
    mapping = dict(zip(cols[p], images))
    sigma = Permutation(tuple(mapping.get(i, i) for i in range(1, a.n + 1)))
    moved = sorted(mapping[x] for x in phi)
    assert multitranspose(a, phi, psi).act(sigma) == multitranspose(a, moved, psi).scale(sigma.sign)


@settings(max_examples=200, deadline=None)
@given(garnir_setups(d=1))
def test_alternation_without_spare_entries(g):
    a, xi, eta = g["a"], g["xi"], g["eta"]
    s, t = len(xi), len(eta)
    lhs = column_alternate(polytabloid(a), xi + eta)
    rhs = multitranspose(a, g["xibar"], eta).scale(math.factorial(s) * math.factorial(t))
    assert lhs == rhs


@settings(max_examples=200, deadline=None)
@given(garnir_setups(d=2))
def test_alternation_with_one_spare_entry(g):
    a, xi, eta = g["a"], g["xi"], g["eta"]
    s = len(xi)
    lhs = column_alternate(polytabloid(a), xi + eta)
    rhs = column_alternate(multitranspose(a, g["xibar1"], eta), g["xibar"]).scale(math.factorial(s))
    assert lhs == rhs


@settings(max_examples=200, deadline=None)
@given(garnir_setups())
def test_alternation_with_spare_entries_any_d(g):
    a, xi, eta, d = g["a"], g["xi"], g["eta"], g["d"]
    s = len(xi)
    lhs = column_alternate(polytabloid(a), xi + eta).scale(math.factorial(d - 1))
    rhs = column_alternate(multitranspose(a, g["xibar1"], eta), g["xibar"]).scale(math.factorial(s))
    assert lhs == rhs


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_full_garnir_formula(data):
    g = data.draw(garnir_setups())
    a, xi, eta, d, p = g["a"], g["xi"], g["eta"], g["d"], g["p"]
    s, t = len(xi), len(eta)
    earlier = [x for j in range(p - 1) for x in a.columns[j]]
    room = 7 - s - t
    assume(room >= 0)
    phi = data.draw(st.lists(st.sampled_from(earlier), unique=True, max_size=min(room, len(earlier)))) if earlier else []
    union = phi + xi + eta
    lhs = column_alternate(polytabloid(a), union).scale(math.factorial(s + t) * math.factorial(d - 1))
    inner = column_alternate(multitranspose(a, g["xibar1"], eta), g["xibar"])
    rhs = column_alternate(inner, union).scale(math.factorial(s))
    assert lhs == rhs


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_subset_sum_expansion(data):
    g = data.draw(garnir_setups())
    a, xi, eta, q = g["a"], g["xi"], g["eta"], g["q"]
    u = a.shape.col(q) - len(eta)
    assume(u >= 1)
    i = data.draw(st.integers(1, u))
    assert eval_garnir_C(a, xi, eta, i, q) == eval_garnir_C_expansion(a, xi, eta, i, q)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_primed_subset_sum_expansion(data):
    g = data.draw(garnir_setups())
    a, xi, eta = g["a"], g["xi"], g["eta"]
    assume(eta)
    psi = sorted(data.draw(st.lists(st.sampled_from(xi), unique=True))) if xi else []
    i = data.draw(st.integers(1, len(eta)))
    assert eval_garnir_Cp(a, xi, psi, eta, i) == eval_garnir_Cp_expansion(a, xi, psi, eta, i)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_uniform_weights_suffice_when_psi_is_empty_or_all_of_xi(data):
    g = data.draw(garnir_setups())
    a, xi, eta = g["a"], g["xi"], g["eta"]
    assume(eta)
    psi = data.draw(st.sampled_from([[], list(xi)]))
    i = data.draw(st.integers(1, len(eta)))
    expected = eval_garnir_Cp(a, xi, psi, eta, i)
    assert eval_garnir_Cp_expansion(a, xi, psi, eta, i, uniform_weights=True) == expected


def test_uniform_weights_fail_for_a_proper_part_of_xi():
    a = Tableau.parse("1,2/3/4/5/6")
    xi, psi, eta = [1, 3, 4, 5], [1], [2]
    expected = eval_garnir_Cp(a, xi, psi, eta, 1)
    assert eval_garnir_Cp_expansion(a, xi, psi, eta, 1) == expected
    assert eval_garnir_Cp_expansion(a, xi, psi, eta, 1, uniform_weights=True) != expected


def test_primed_weight_values():
    # i0 = 0 always carries t! s! (i+v)! binom(t, i)
    assert primed_expansion_weight(4, 1, 1, 1, 0) == 1 * 24 * 2 * 1
    # one exchanged entry of xi minus psi: the psi exchange is averaged over two collapses
    assert primed_expansion_weight(4, 1, 1, 1, 1) == 24 * 1 * 1 * 1 * 1


def test_subset_sum_expansion_on_2_2():
    a = canonical_tableau(Partition((2, 2)))
    # d = 1: s + t = 2 with xi in the first column and eta = {3} in the second
    xi, eta = [2], [3]
    assert eval_garnir_C(a, xi, eta, 1) == eval_garnir_C_expansion(a, xi, eta, 1)


def test_primed_subset_sum_expansion_on_3_2():
    a = canonical_tableau(Partition((3, 2)))
    for xi, psi, eta in [([2], [2], [3]), ([2], [], [3]), ([1], [1], [4])]:
        expected = eval_garnir_Cp(a, xi, psi, eta, 1)
        assert not expected.is_zero()
        assert eval_garnir_Cp_expansion(a, xi, psi, eta, 1) == expected
        assert eval_garnir_Cp_expansion(a, xi, psi, eta, 1, uniform_weights=True) == expected


def test_signed_sum_at_zero_has_no_complement_part():
    a = canonical_tableau(Partition((2, 2)))
    xi, eta = [1, 2], [3]
    expected = FreeElement.zero(a.shape)
    for s0 in range(0, 3):
        for xi0 in itertools.combinations(xi, s0):
            for eta0 in itertools.combinations(eta, s0):
                expected = expected + multitranspose(a, xi0, eta0).scale((-1) ** s0)
    assert eval_garnir_B(a, xi, eta, 0) == expected


def test_garnir_evaluators_reject_bad_domains():
    a = canonical_tableau(Partition((2, 2)))
    with pytest.raises(DomainError):
        eval_garnir_B(a, [1], [3], 2)
    with pytest.raises(DomainError):
        eval_garnir_C(a, [1], [3], 2)
    with pytest.raises(DomainError):
        eval_garnir_Bp(a, [1], [2], [3], 0)
    with pytest.raises(DomainError):
        eval_garnir_B(a, [1], [2], 0)
