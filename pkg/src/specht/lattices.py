"""Tabloid modules, polytabloids, the Specht lattice and straightening.

Elements of the tabloid module are :class:`FreeElement` values whose terms are
keyed by tabloid row words.  Elements of the Specht lattice are
:class:`SpechtVector` values holding coordinates in the standard basis, which
is ordered by increasing tabloid row word.

For a standard tableau ``b`` the tabloid ``{b}`` is the lexicographically
smallest tabloid in the support of ``<b>``, and no other standard tabloid
smaller than it occurs there.  Hence the matrix of coefficients of standard
polytabloids at standard tabloids is unitriangular.  Straightening reads off the
coefficients of an element at the standard tabloids and solves this system.
"""

from __future__ import annotations

import itertools
import heapq
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .combinatorics import (
    FormalPermSum,
    Partition,
    Permutation,
    Tableau,
    Tabloid,
    _check_group_size,
    act_on_word,
    canonical_tableau,
    permutation_between,
    permutation_sign,
    signed_permutations,
    standard_tableaux,
    word_to_text,
)
from .errors import DomainError, NotInSpechtLattice, exact_div

Word = tuple[int, ...]


# ---------------------------------------------------------------------------
# Elements


@dataclass(frozen=True)
class FreeElement:
    """An integral combination of tabloids of one shape.

    ``terms`` maps tabloid row words to coefficients.  With ``alternated`` set,
    a permutation acts with an extra factor of its sign.
    """

    shape: Partition
    terms: Mapping[Word, int]
    alternated: bool = False

    def __post_init__(self):
        object.__setattr__(self, "terms", {tuple(w): int(c) for w, c in self.terms.items() if c})

    @classmethod
    def zero(cls, shape: Partition, alternated: bool = False) -> "FreeElement":
        return cls(shape, {}, alternated)

    @classmethod
    def of_tabloid(cls, t: Tabloid, coeff: int = 1, alternated: bool = False) -> "FreeElement":
        return cls(t.shape, {t.word: coeff}, alternated)

    def coefficient(self, t) -> int:
        word = t.word if isinstance(t, Tabloid) else tuple(t)
        return self.terms.get(word, 0)

    def tabloids(self) -> list[tuple[Tabloid, int]]:
        return [(Tabloid(w, self.shape), c) for w, c in sorted(self.terms.items())]

    def _check(self, other: "FreeElement"):
        if self.shape != other.shape or self.alternated != other.alternated:
            raise DomainError("elements of different modules")

    def __add__(self, other: "FreeElement") -> "FreeElement":
        self._check(other)
        acc = dict(self.terms)
        for w, c in other.terms.items():
            acc[w] = acc.get(w, 0) + c
        return FreeElement(self.shape, acc, self.alternated)

    def __neg__(self) -> "FreeElement":
        return self.scale(-1)

    def __sub__(self, other: "FreeElement") -> "FreeElement":
        return self + (-other)

    def scale(self, c: int) -> "FreeElement":
        return FreeElement(self.shape, {w: c * v for w, v in self.terms.items()}, self.alternated)

    def __rmul__(self, c: int) -> "FreeElement":
        return self.scale(c)

    def exact_divide(self, c: int) -> "FreeElement":
        return FreeElement(self.shape, {w: exact_div(v, c) for w, v in self.terms.items()}, self.alternated)

    def reduce(self, m: int) -> "FreeElement":
        if m == 0:
            return self
        return FreeElement(self.shape, {w: v % m for w, v in self.terms.items()}, self.alternated)

    def is_zero(self) -> bool:
        return not self.terms

    def act(self, sigma: Permutation) -> "FreeElement":
        if sigma.n != self.shape.n:
            raise DomainError("size mismatch between permutation and element")
        imgs = sigma.images
        c0 = sigma.sign if self.alternated else 1
        return FreeElement(
            self.shape, {act_on_word(w, imgs): c0 * c for w, c in self.terms.items()}, self.alternated
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return "\n".join(f"{c} * {word_to_text(w)}" for w, c in sorted(self.terms.items()))


@dataclass(frozen=True)
class SpechtVector:
    """Coordinates of an element of the Specht lattice in the standard basis.

    ``modulus`` 0 means integral coordinates; otherwise coordinates are residues.
    """

    shape: Partition
    coords: tuple[int, ...]
    modulus: int = 0

    def __post_init__(self):
        if self.modulus < 0:
            raise DomainError("negative modulus")
        coords = tuple(int(c) for c in self.coords)
        if self.modulus:
            coords = tuple(c % self.modulus for c in coords)
        if len(coords) != specht_dimension(self.shape):
            raise DomainError(f"expected {specht_dimension(self.shape)} coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, shape: Partition, modulus: int = 0) -> "SpechtVector":
        return cls(shape, (0,) * specht_dimension(shape), modulus)

    @classmethod
    def unit(cls, shape: Partition, index: int, coeff: int = 1, modulus: int = 0) -> "SpechtVector":
        coords = [0] * specht_dimension(shape)
        coords[index] = coeff
        return cls(shape, tuple(coords), modulus)

    def _check(self, other: "SpechtVector"):
        if self.shape != other.shape:
            raise DomainError("vectors of different shapes")

    def __add__(self, other: "SpechtVector") -> "SpechtVector":
        self._check(other)
        m = self.modulus or other.modulus
        return SpechtVector(self.shape, tuple(a + b for a, b in zip(self.coords, other.coords)), m)

    def __neg__(self) -> "SpechtVector":
        return self.scale(-1)

    def __sub__(self, other: "SpechtVector") -> "SpechtVector":
        return self + (-other)

    def scale(self, c: int) -> "SpechtVector":
        return SpechtVector(self.shape, tuple(c * a for a in self.coords), self.modulus)

    def __rmul__(self, c: int) -> "SpechtVector":
        return self.scale(c)

    def reduce(self, m: int) -> "SpechtVector":
        return SpechtVector(self.shape, self.coords, m)

    def exact_divide(self, c: int) -> "SpechtVector":
        if self.modulus:
            raise DomainError("exact division applies to integral vectors only")
        return SpechtVector(self.shape, tuple(exact_div(a, c) for a in self.coords), 0)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def support(self) -> dict[int, int]:
        return {i: c for i, c in enumerate(self.coords) if c}

    def to_element(self) -> FreeElement:
        """Expansion in the tabloid module (integral lift of residues)."""
        basis = specht_basis(self.shape)
        acc: dict[Word, int] = {}
        for i, c in enumerate(self.coords):
            if c:
                for w, v in basis.expansion(i).items():
                    acc[w] = acc.get(w, 0) + c * v
        return FreeElement(self.shape, acc)

    def __str__(self) -> str:
        return f"{self.modulus}; " + ",".join(map(str, self.coords))


# ---------------------------------------------------------------------------
# Polytabloids


def polytabloid(a: Tableau, limit: int | None = None) -> FreeElement:
    """The signed sum of the tabloids ``{a k}`` over the column stabilizer of ``a``."""
    _check_group_size(math.prod(math.factorial(len(c)) for c in a.columns), limit)
    return FreeElement(a.shape, _expand(a.columns, a.n))


def _expand(columns: Sequence[Sequence[int]], n: int) -> dict[Word, int]:
    terms: dict[tuple[int, ...], int] = {(0,) * n: 1}
    for col in columns:
        if len(col) == 1:
            x = col[0] - 1
            terms = {w[:x] + (1,) + w[x + 1 :]: c for w, c in terms.items()}
            continue
        new: dict[tuple[int, ...], int] = {}
        for perm, sgn in signed_permutations(len(col)):
            for w, c in terms.items():
                lw = list(w)
                for x, r in zip(col, perm):
                    lw[x - 1] = r + 1
                new[tuple(lw)] = c * sgn
        terms = new
    return terms


def tabloid_coefficient(a: Tableau, word: Sequence[int]) -> int:
    """Coefficient of the tabloid with row word ``word`` in the polytabloid of ``a``."""
    sign = 1
    for col in a.columns:
        rows = [word[x - 1] for x in col]
        if sorted(rows) != list(range(1, len(col) + 1)):
            return 0
        sign *= permutation_sign(rows)
    return sign


def column_sorted(a: Tableau) -> tuple[Tableau, int]:
    """Sort each column of ``a`` increasingly; return the result and the sorting sign."""
    sign = 1
    cols = []
    for col in a.columns:
        order = sorted(range(len(col)), key=lambda i: col[i])
        sign *= permutation_sign([i + 1 for i in order])
        cols.append(tuple(col[i] for i in order))
    return Tableau.from_columns(a.shape, cols), sign


# ---------------------------------------------------------------------------
# Standard basis


class SpechtBasis:
    """Standard tableaux of one shape with the data needed for straightening."""

    def __init__(self, shape: Partition):
        self.shape = shape
        tabs = sorted(standard_tableaux(shape), key=lambda t: t.row_word())
        self.tableaux: tuple[Tableau, ...] = tuple(tabs)
        self.words: tuple[Word, ...] = tuple(t.row_word() for t in tabs)
        self.index: dict[Word, int] = {w: i for i, w in enumerate(self.words)}
        base = canonical_tableau(shape)
        self.permutations: tuple[Permutation, ...] = tuple(permutation_between(base, t) for t in tabs)
        self.tableau_index: dict[tuple, int] = {t.rows: i for i, t in enumerate(tabs)}
        # tri[i] maps j -> coefficient of the j-th standard tabloid in the i-th polytabloid
        self.tri: list[dict[int, int]] = []
        for i, t in enumerate(tabs):
            row = {}
            for j, w in enumerate(self.words):
                c = tabloid_coefficient(t, w)
                if c:
                    if j < i or (j == i and c != 1):
                        raise AssertionError("standard polytabloid matrix is not unitriangular")
                    row[j] = c
            self.tri.append(row)
        self._expansions: dict[int, dict[Word, int]] = {}

    def __len__(self) -> int:
        return len(self.tableaux)

    def expansion(self, i: int) -> dict[Word, int]:
        """Tabloid expansion of the i-th standard polytabloid (cached)."""
        if i not in self._expansions:
            self._expansions[i] = polytabloid(self.tableaux[i]).terms
        return self._expansions[i]

    def solve(self, values: Mapping[int, int]) -> list[int]:
        """Coordinates c with ``sum_i c_i tri[i][j] == values[j]`` for every standard index j."""
        residual = dict(v for v in values.items() if v[1])
        coords = [0] * len(self)
        heap = list(residual)
        heapq.heapify(heap)
        while heap:
            j = heapq.heappop(heap)
            c = residual.pop(j, 0)
            if not c:
                continue
            coords[j] = c
            for k, v in self.tri[j].items():
                if k == j:
                    continue
                if k not in residual:
                    residual[k] = 0
                    heapq.heappush(heap, k)
                residual[k] -= c * v
        return coords


@lru_cache(maxsize=None)
def specht_basis(shape: Partition) -> SpechtBasis:
    return SpechtBasis(shape)


def standard_basis(shape: Partition) -> tuple[Tableau, ...]:
    """Standard tableaux ordered by increasing tabloid row word."""
    return specht_basis(shape).tableaux


def standard_basis_permutations(shape: Partition) -> tuple[Permutation, ...]:
    """The permutations carrying the canonical tableau to each standard tableau, in basis order."""
    return specht_basis(shape).permutations


def specht_dimension(shape: Partition) -> int:
    return len(specht_basis(shape))


# ---------------------------------------------------------------------------
# Straightening


def straighten(x, method: str = "oracle", check: bool = True) -> SpechtVector:
    """Standard-basis coordinates of a tableau's polytabloid or of an element of the lattice.

    ``method`` is ``"oracle"`` (triangular solve) or ``"garnir"`` (rewriting by
    Garnir relations, tableau inputs only).  For :class:`FreeElement` inputs
    with ``check`` set, membership in the Specht lattice is verified.
    """
    if isinstance(x, Tableau):
        if method == "garnir":
            return SpechtVector(x.shape, tuple(_garnir_coords(x)))
        if method != "oracle":
            raise DomainError(f"unknown straightening method {method!r}")
        return SpechtVector(x.shape, tuple(_straighten_tableau(x)))
    if isinstance(x, FreeElement):
        if x.alternated:
            raise DomainError("straightening applies to the untwisted tabloid module")
        basis = specht_basis(x.shape)
        values = {}
        for w, c in x.terms.items():
            j = basis.index.get(w)
            if j is not None:
                values[j] = c
        coords = basis.solve(values)
        if check:
            residual = dict(x.terms)
            for i, c in enumerate(coords):
                if c:
                    for w, v in basis.expansion(i).items():
                        residual[w] = residual.get(w, 0) - c * v
            if any(residual.values()):
                raise NotInSpechtLattice("element is not a combination of standard polytabloids")
        return SpechtVector(x.shape, tuple(coords))
    raise TypeError(f"cannot straighten {type(x).__name__}")


@lru_cache(maxsize=1 << 18)
def straighten_sparse(shape: Partition, rows: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, int], ...]:
    """Nonzero standard coordinates of the polytabloid of the tableau with the given rows (cached)."""
    coords = _straighten_tableau(Tableau(shape, rows))
    return tuple((i, c) for i, c in enumerate(coords) if c)


def _straighten_tableau(a: Tableau) -> list[int]:
    basis = specht_basis(a.shape)
    b, sign = column_sorted(a)
    i = basis.tableau_index.get(b.rows)
    if i is not None:
        coords = [0] * len(basis)
        coords[i] = sign
        return coords
    values = {}
    for j, w in enumerate(basis.words):
        c = tabloid_coefficient(b, w)
        if c:
            values[j] = sign * c
    return basis.solve(values)


_GARNIR_MEMO: dict[tuple, dict[int, int]] = {}


def _garnir_coords(a: Tableau) -> list[int]:
    basis = specht_basis(a.shape)
    coords = [0] * len(basis)
    for i, c in _garnir_rewrite(a).items():
        coords[i] = c
    return coords


def _garnir_rewrite(a: Tableau) -> dict[int, int]:
    basis = specht_basis(a.shape)
    b, sign = column_sorted(a)
    i = basis.tableau_index.get(b.rows)
    if i is not None:
        return {i: sign}
    key = (a.shape, b.rows)
    cached = _GARNIR_MEMO.get(key)
    if cached is None:
        cached = _garnir_expand(b)
        _GARNIR_MEMO[key] = cached
    return {k: sign * v for k, v in cached.items()}


def _garnir_expand(b: Tableau) -> dict[int, int]:
    """Rewrite the polytabloid of a column-sorted, non-standard tableau by one Garnir relation."""
    descent = None
    for j in range(1, b.shape.num_columns):
        for i in range(1, b.shape.col(j + 1) + 1):
            if b.entry(j, i) > b.entry(j + 1, i):
                descent = (j, i)
                break
        if descent:
            break
    if descent is None:
        raise AssertionError("column-sorted tableau without row descent must be standard")
    j, i = descent
    xi = b.column(j)[i - 1 :]
    eta = b.column(j + 1)[:i]
    acc: dict[int, int] = {}
    for sigma, eps in garnir_cosets(xi, eta, b.n):
        if sigma.is_identity():
            continue
        for k, v in _garnir_rewrite(b.act(sigma)).items():
            acc[k] = acc.get(k, 0) - eps * v
    return {k: v for k, v in acc.items() if v}


# ---------------------------------------------------------------------------
# Group-ring action


def act_element(x: FreeElement, sigma: Permutation) -> FreeElement:
    return x.act(sigma)


def apply_word(x, w: FormalPermSum):
    """Right action of a group-ring element on a tabloid-module element or a lattice vector."""
    if isinstance(x, FreeElement):
        acc: dict[Word, int] = {}
        for sigma, c in w.items():
            if sigma.n != x.shape.n:
                raise DomainError("size mismatch between word and element")
            c0 = c * (sigma.sign if x.alternated else 1)
            imgs = sigma.images
            for t, v in x.terms.items():
                u = act_on_word(t, imgs)
                acc[u] = acc.get(u, 0) + c0 * v
        return FreeElement(x.shape, acc, x.alternated)
    if isinstance(x, SpechtVector):
        basis = specht_basis(x.shape)
        acc_c = [0] * len(basis)
        for sigma, c in w.items():
            if sigma.n != x.shape.n:
                raise DomainError("size mismatch between word and vector")
            for i, v in enumerate(x.coords):
                if v:
                    rows = basis.tableaux[i].act(sigma).rows
                    for k, u in straighten_sparse(x.shape, rows):
                        acc_c[k] += c * v * u
        return SpechtVector(x.shape, tuple(acc_c), x.modulus)
    raise TypeError(f"cannot act on {type(x).__name__}")


def column_alternate(x: FreeElement, zeta: Iterable[int], limit: int | None = None) -> FreeElement:
    """The alternating sum of ``x sigma`` over all permutations sigma of the set ``zeta``."""
    zeta = sorted(set(zeta))
    _check_group_size(math.factorial(len(zeta)), limit)
    n = x.shape.n
    acc: dict[Word, int] = {}
    for perm, sgn in signed_permutations(len(zeta)):
        imgs = list(range(1, n + 1))
        for src, k in zip(zeta, perm):
            imgs[src - 1] = zeta[k]
        c0 = sgn * (sgn if x.alternated else 1)
        for t, v in x.terms.items():
            u = act_on_word(t, imgs)
            acc[u] = acc.get(u, 0) + c0 * v
    return FreeElement(x.shape, acc, x.alternated)


def inner_product(x: FreeElement, y: FreeElement) -> int:
    """The bilinear form for which the tabloids are orthonormal."""
    if x.shape != y.shape:
        raise DomainError("elements of different shapes")
    if x.alternated or y.alternated:
        raise DomainError("inner product is defined on the untwisted module")
    small, big = (x, y) if len(x.terms) <= len(y.terms) else (y, x)
    return sum(c * big.terms.get(w, 0) for w, c in small.terms.items())


# ---------------------------------------------------------------------------
# Garnir relations


def garnir_cosets(xi: Sequence[int], eta: Sequence[int], n: int) -> list[tuple[Permutation, int]]:
    """Coset representatives for the product of the groups on ``xi`` and ``eta`` inside the group on their union.

    One representative per subset Y of the union with ``len(xi)`` elements: it
    maps ``xi`` onto Y and ``eta`` onto the complement, both order-preservingly.
    Returned with signs, identity first.
    """
    xs, es = sorted(xi), sorted(eta)
    union = sorted(xs + es)
    if len(set(union)) != len(union):
        raise DomainError("xi and eta must be disjoint")
    out = []
    for ys in itertools.combinations(union, len(xs)):
        rest = [z for z in union if z not in ys]
        imgs = list(range(1, n + 1))
        for src, dst in zip(xs, ys):
            imgs[src - 1] = dst
        for src, dst in zip(es, rest):
            imgs[src - 1] = dst
        sigma = Permutation(tuple(imgs))
        out.append((sigma, sigma.sign))
    out.sort(key=lambda pe: (not pe[0].is_identity(), pe[0].images))
    return out


def garnir_word(lam: Partition, p: int, s: int, t: int) -> FormalPermSum:
    """The signed coset sum over the bottom s entries of column p and the top t entries of column p+1 of the canonical tableau."""
    conj = lam.conjugate
    if not 1 <= p < lam.num_columns:
        raise DomainError(f"no column pair ({p},{p + 1}) in {lam}")
    if s < 1 or t < 1 or s + t != conj.part(p) + 1 or t > conj.part(p + 1):
        raise DomainError(f"invalid Garnir parameters s={s}, t={t} at column {p} of {lam}")
    a = canonical_tableau(lam)
    xi = a.column(p)[-s:]
    eta = a.column(p + 1)[:t]
    return FormalPermSum({sigma: eps for sigma, eps in garnir_cosets(xi, eta, lam.n)})


# ---------------------------------------------------------------------------
# Multitranspositions and the Garnir-formula sums


def _column_of_subset(a: Tableau, subset: Iterable[int]) -> int:
    subset = set(subset)
    for j, col in enumerate(a.columns, start=1):
        if subset <= set(col):
            return j
    raise DomainError(f"{sorted(subset)} does not lie in a single column")


def multitransposition(n: int, phi: Sequence[int], psi: Sequence[int]) -> Permutation:
    """The product of the transpositions (phi[i], psi[i])."""
    if len(phi) != len(psi):
        raise DomainError("phi and psi must have equal size")
    if set(phi) & set(psi):
        raise DomainError("phi and psi must be disjoint")
    imgs = list(range(1, n + 1))
    for x, y in zip(phi, psi):
        imgs[x - 1], imgs[y - 1] = y, x
    return Permutation(tuple(imgs))


def multitranspose(
    a: Tableau, phi: Sequence[int], psi: Sequence[int], pairing: Sequence[int] | None = None
) -> FreeElement:
    """The polytabloid of ``a`` acted on by the transpositions pairing ``phi`` with ``psi``.

    ``pairing`` lists the partner in ``psi`` of each element of ``sorted(phi)``;
    by default both sets are paired in increasing order.
    """
    phi, psi = sorted(phi), sorted(psi)
    if len(phi) != len(psi):
        raise DomainError("phi and psi must have equal size")
    if phi:
        p = _column_of_subset(a, phi)
        q = _column_of_subset(a, psi)
        if p == q:
            raise DomainError("phi and psi must lie in different columns")
    partners = list(pairing) if pairing is not None else psi
    if sorted(partners) != psi:
        raise DomainError("pairing is not a bijection onto psi")
    return polytabloid(a.act(multitransposition(a.n, phi, partners)))


def _subsets(s: Sequence[int], k: int):
    return itertools.combinations(sorted(s), k)


def _garnir_sets(a: Tableau, xi, eta):
    p = _column_of_subset(a, xi) if xi else None
    q = _column_of_subset(a, eta) if eta else None
    if p is not None and q is not None and p == q:
        raise DomainError("xi and eta must lie in different columns")
    return p, q


def eval_garnir_B(a: Tableau, xi: Sequence[int], eta: Sequence[int], i0: int, column_q: int | None = None) -> FreeElement:
    """Signed sum of multitransposed polytabloids exchanging parts of ``xi`` with parts of ``eta`` and its column complement.

    ``column_q`` names the column containing ``eta`` when ``eta`` is empty.
    """
    p, q = _garnir_sets(a, xi, eta)
    q = q or column_q
    if q is None:
        raise DomainError("column of eta is undetermined")
    s = len(xi)
    if not 0 <= i0 <= s:
        raise DomainError(f"i0={i0} outside [0,{s}]")
    etabar = [x for x in a.column(q) if x not in eta]
    acc = FreeElement.zero(a.shape)
    for s0 in range(i0, s + 1):
        sgn = -1 if s0 % 2 else 1
        for xi0 in _subsets(xi, s0):
            for eta0 in _subsets(eta, s0 - i0):
                for phi0 in _subsets(etabar, i0):
                    acc = acc + multitranspose(a, xi0, eta0 + phi0).scale(sgn)
    return acc


def eval_garnir_C(a: Tableau, xi: Sequence[int], eta: Sequence[int], i: int, column_q: int | None = None) -> FreeElement:
    """Sum over i-subsets phi of the column complement of ``eta`` of the polytabloid alternated over the union with phi."""
    p, q = _garnir_sets(a, xi, eta)
    q = q or column_q
    if q is None:
        raise DomainError("column of eta is undetermined")
    etabar = [x for x in a.column(q) if x not in eta]
    if not 1 <= i <= len(etabar):
        raise DomainError(f"i={i} outside [1,{len(etabar)}]")
    base = polytabloid(a)
    acc = FreeElement.zero(a.shape)
    for phi in _subsets(etabar, i):
        acc = acc + column_alternate(base, list(xi) + list(eta) + list(phi))
    return acc


def eval_garnir_C_expansion(a: Tableau, xi, eta, i: int, column_q: int | None = None) -> FreeElement:
    """The binomial expansion of :func:`eval_garnir_C` in terms of :func:`eval_garnir_B`."""
    _, q = _garnir_sets(a, xi, eta)
    q = q or column_q
    s, t = len(xi), len(eta)
    u = a.shape.col(q) - t
    acc = FreeElement.zero(a.shape)
    for i0 in range(0, min(i, s) + 1):
        acc = acc + eval_garnir_B(a, xi, eta, i0, q).scale(math.comb(u - i0, i - i0))
    return acc.scale(math.factorial(s) * math.factorial(t + i))


def _primed_sets(a: Tableau, xi, psi, eta):
    if not set(psi) <= set(xi):
        raise DomainError("psi must be a subset of xi")
    _garnir_sets(a, xi, eta)
    return [x for x in xi if x not in psi]


def eval_garnir_Bp(a: Tableau, xi, psi, eta, i0: int) -> FreeElement:
    """Signed sum of alternated multitransposed polytabloids for a subset ``psi`` of ``xi``, divided exactly by ``v! t!``."""
    rest = _primed_sets(a, xi, psi, eta)
    v, t = len(psi), len(eta)
    if not 0 <= i0 <= len(rest):
        raise DomainError(f"i0={i0} outside [0,{len(rest)}]")
    acc = FreeElement.zero(a.shape)
    for xi0 in _subsets(rest, i0):
        for phi0 in _subsets(eta, i0):
            acc = acc + column_alternate(multitranspose(a, xi0, phi0), list(psi) + list(eta))
    sgn = -1 if i0 % 2 else 1
    return acc.exact_divide(math.factorial(v) * math.factorial(t)).scale(sgn)


def eval_garnir_Cp(a: Tableau, xi, psi, eta, i: int) -> FreeElement:
    """Sum over i-subsets phi of ``eta`` of the polytabloid alternated over ``xi`` with phi, then over ``psi`` with ``eta``."""
    _primed_sets(a, xi, psi, eta)
    if not 1 <= i <= len(eta):
        raise DomainError(f"i={i} outside [1,{len(eta)}]")
    base = polytabloid(a)
    acc = FreeElement.zero(a.shape)
    for phi in _subsets(eta, i):
        acc = acc + column_alternate(column_alternate(base, list(xi) + list(phi)), list(psi) + list(eta))
    return acc


def primed_expansion_weight(s: int, t: int, v: int, i: int, i0: int) -> int:
    """Weight of the ``i0`` term in the expansion of :func:`eval_garnir_Cp`.

    A term exchanging ``k`` elements of ``psi`` collapses to one exchanging
    ``i0`` elements of ``xi`` minus ``psi``; it is reached through
    ``binom(i0 + k, k)`` choices of the collapsed pairs, hence the averaging.
    """
    inner = sum(
        math.comb(v, k) * math.comb(i - i0, k) * math.factorial(i) * math.factorial(i0) * math.factorial(k)
        // math.factorial(i0 + k)
        for k in range(0, min(v, i - i0) + 1)
    )
    return math.factorial(s) * math.factorial(t) * math.factorial(v) * math.comb(t - i0, i - i0) * inner


def eval_garnir_Cp_expansion(a: Tableau, xi, psi, eta, i: int, uniform_weights: bool = False) -> FreeElement:
    """The binomial expansion of :func:`eval_garnir_Cp` in terms of :func:`eval_garnir_Bp`.

    With ``uniform_weights`` every term carries ``t! s! (i+v)! binom(t-i0, i-i0)``.
    That agrees with :func:`primed_expansion_weight` at ``i0 = 0``, so it is
    exact when ``psi`` is empty or equal to ``xi``, and in general it is not.
    """
    _primed_sets(a, xi, psi, eta)
    s, t, v = len(xi), len(eta), len(psi)
    acc = FreeElement.zero(a.shape)
    for i0 in range(0, min(i, s - v) + 1):
        if uniform_weights:
            w = math.factorial(t) * math.factorial(s) * math.factorial(i + v) * math.comb(t - i0, i - i0)
        else:
            w = primed_expansion_weight(s, t, v, i, i0)
        acc = acc + eval_garnir_Bp(a, xi, psi, eta, i0).scale(w)
    return acc
