"""Correspondoids, their tabloid maps, dualization and transposition of morphisms.

A correspondoid from ``mu`` to ``lam`` is a filling of the diagram of ``lam``
in which the value j occurs ``mu_j`` times.  It defines the map
``Theta: M^lam -> M^mu`` sending a tabloid to the sum of all distinct
``mu``-tabloids obtained by sending the entries of each row to the rows named
by the values in the corresponding row of the filling.

Transposition conjugates a morphism ``S^lam/m -> S^mu/m`` through the
dualization isomorphisms ``S^lam' -> (S^lam)*`` to a morphism
``S^mu'/m -> S^lam'/m``.
"""

from __future__ import annotations

import functools
import itertools
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .combinatorics import (
    GROUP_SIZE_LIMIT,
    Partition,
    Permutation,
    Tableau,
    act_on_word,
    canonical_tableau,
    column_stabilizer,
    permutation_between,
    row_stabilizer,
    subset_group,
)
from .errors import DomainError, GroupSizeError, exact_div
from .homsolver import Morphism, tabloid_index, tabloid_words
from .lattices import (
    FreeElement,
    SpechtVector,
    polytabloid,
    specht_basis,
    standard_basis,
    standard_basis_permutations,
    tabloid_coefficient,
)
from .zlinalg import inverse_unimodular, matmul, transpose

# ---------------------------------------------------------------------------
# Correspondoids


@dataclass(frozen=True)
class Correspondoid:
    """A ``target``-shaped filling with content ``source`` (value j appears ``source_j`` times)."""

    source: Partition
    target: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        if tuple(len(r) for r in rows) != self.target.parts:
            raise DomainError(f"filling {rows} does not have shape {self.target}")
        content = Counter(v for r in rows for v in r)
        if any(v < 1 or v > len(self.source) for v in content) or any(
            content[j + 1] != p for j, p in enumerate(self.source.parts)
        ):
            raise DomainError(f"filling {rows} does not have content {self.source}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def parse(cls, source: Partition, text: str) -> "Correspondoid":
        rows = tuple(tuple(int(t) for t in r.split(",")) for r in text.strip().split(";") if r.strip())
        return cls(source, Partition(tuple(len(r) for r in rows)), rows)

    @classmethod
    def identity(cls, lam: Partition) -> "Correspondoid":
        return cls(lam, lam, tuple((i + 1,) * p for i, p in enumerate(lam.parts)))

    def value(self, row: int, col: int) -> int:
        return self.rows[row - 1][col - 1]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j - 1] for r in self.rows if len(r) >= j)

    def is_semistandard(self) -> bool:
        return is_semistandard(self)

    def inverse(self) -> "Correspondoid":
        """The filling of ``source`` recording, for each row, the rows of the cells carrying that value."""
        rows = [[] for _ in self.source.parts]
        for i, r in enumerate(self.rows, start=1):
            for v in r:
                rows[v - 1].append(i)
        return Correspondoid(self.target, self.source, tuple(tuple(sorted(r)) for r in rows))

    def permute_rows(self, rho: Permutation) -> "Correspondoid":
        """Precompose with a row permutation of the target diagram, given on reading-order cell labels."""
        flat = [v for r in self.rows for v in r]
        new = [0] * len(flat)
        for x, v in enumerate(flat):
            new[rho.images[x] - 1] = v
        out, pos = [], 0
        for p in self.target.parts:
            out.append(tuple(new[pos : pos + p]))
            pos += p
        return Correspondoid(self.source, self.target, tuple(out))

    def __str__(self) -> str:
        return ";".join(",".join(map(str, r)) for r in self.rows)


def is_semistandard(c: Correspondoid) -> bool:
    """Rows weakly increase and columns strictly increase."""
    rows_ok = all(a <= b for r in c.rows for a, b in zip(r, r[1:]))
    cols_ok = all(
        c.rows[i][j] < c.rows[i + 1][j] for i in range(len(c.rows) - 1) for j in range(len(c.rows[i + 1]))
    )
    return rows_ok and cols_ok


def enumerate_correspondoids(mu: Partition, lam: Partition, limit: int | None = GROUP_SIZE_LIMIT) -> list[Correspondoid]:
    """All ``lam``-shaped fillings of content ``mu``, in lexicographic order of the reading word."""
    if mu.n != lam.n:
        raise DomainError("shapes of different size")
    total = math.factorial(mu.n) // math.prod(math.factorial(p) for p in mu.parts)
    if limit is not None and total > limit:
        raise GroupSizeError(f"{total} correspondoids exceed the bound {limit}")
    out = []
    for word in _multiset_words(tuple(mu.parts)):
        rows, pos = [], 0
        for p in lam.parts:
            rows.append(word[pos : pos + p])
            pos += p
        out.append(Correspondoid(mu, lam, tuple(rows)))
    return out


def _multiset_words(counts: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Words with ``counts[j]`` letters ``j+1``, lexicographically."""
    left = list(counts)
    word: list[int] = []
    size = sum(counts)

    def rec():
        if len(word) == size:
            yield tuple(word)
            return
        for j, c in enumerate(left):
            if c:
                left[j] -= 1
                word.append(j + 1)
                yield from rec()
                word.pop()
                left[j] += 1

    yield from rec()


def semistandard_correspondoids(mu: Partition, lam: Partition) -> list[Correspondoid]:
    """Semistandard fillings, built row by row instead of filtering all fillings."""
    if mu.n != lam.n:
        raise DomainError("shapes of different size")
    out: list[Correspondoid] = []
    left = list(mu.parts)

    def fill_row(i: int, prev: tuple[int, ...], done: list[tuple[int, ...]]):
        if i == len(lam.parts):
            out.append(Correspondoid(mu, lam, tuple(done)))
            return
        length = lam.parts[i]

        def rec(row: list[int]):
            j = len(row)
            if j == length:
                fill_row(i + 1, tuple(row), done + [tuple(row)])
                return
            lo = max(row[-1] if row else 1, prev[j] + 1 if prev else 1)
            for v in range(lo, len(left) + 1):
                if left[v - 1]:
                    left[v - 1] -= 1
                    row.append(v)
                    rec(row)
                    row.pop()
                    left[v - 1] += 1

        rec([])

    fill_row(0, (), [])
    return out


def count_semistandard(mu: Partition, lam: Partition) -> int:
    return len(semistandard_correspondoids(mu, lam))


def r_phi(c: Correspondoid) -> int:
    """Order of the subgroup of row permutations of the target preserving the filling."""
    return math.prod(math.factorial(k) for r in c.rows for k in Counter(r).values())


def r_phi_bruteforce(c: Correspondoid, limit: int | None = GROUP_SIZE_LIMIT) -> int:
    """Count row permutations of the target diagram that keep every value in place."""
    flat = [v for r in c.rows for v in r]
    blocks, pos = [], 1
    for p in c.target.parts:
        blocks.append(list(range(pos, pos + p)))
        pos += p
    return sum(
        all(flat[rho.images[x] - 1] == flat[x] for x in range(len(flat)))
        for rho in subset_group(len(flat), blocks, limit)
    )


# ---------------------------------------------------------------------------
# Tabloid maps


def _distinct_arrangements(values: Sequence[int]) -> list[tuple[int, ...]]:
    counts = Counter(values)
    keys = sorted(counts)
    return [tuple(keys[v - 1] for v in w) for w in _multiset_words(tuple(counts[k] for k in keys))]


def theta_apply(c: Correspondoid, word: Sequence[int]) -> dict[tuple[int, ...], int]:
    """Image of the ``target``-tabloid with the given row word, as ``source``-tabloid words."""
    lam = c.target
    members: list[list[int]] = [[] for _ in lam.parts]
    for x, r in enumerate(word, start=1):
        members[r - 1].append(x)
    if tuple(len(m) for m in members) != lam.parts:
        raise DomainError(f"word {tuple(word)} is not a tabloid of shape {lam}")
    options = [_distinct_arrangements(c.rows[i]) for i in range(len(lam.parts))]
    out: dict[tuple[int, ...], int] = {}
    for choice in itertools.product(*options):
        new = [0] * len(word)
        for mem, vals in zip(members, choice):
            for x, v in zip(mem, vals):
                new[x - 1] = v
        key = tuple(new)
        out[key] = out.get(key, 0) + 1
    return out


def theta_apply_bruteforce(c: Correspondoid, a: Tableau, limit: int | None = GROUP_SIZE_LIMIT) -> dict[tuple[int, ...], int]:
    """Image of the tabloid of ``a``: the row-group orbit sum of the placed tabloid, divided by its stabilizer order."""
    if a.shape != c.target:
        raise DomainError("tableau does not have the target shape")
    placed = [0] * a.n
    for i, r in enumerate(a.rows):
        for j, x in enumerate(r):
            placed[x - 1] = c.rows[i][j]
    acc: dict[tuple[int, ...], int] = {}
    for rho in row_stabilizer(a, limit):
        w = act_on_word(placed, rho.images)
        acc[w] = acc.get(w, 0) + 1
    r = r_phi(c)
    return {w: exact_div(v, r) for w, v in acc.items()}


def theta_on_element(c: Correspondoid, x: FreeElement) -> FreeElement:
    """Linear extension of :func:`theta_apply` to an element of the target tabloid module."""
    if x.shape != c.target or x.alternated:
        raise DomainError("element does not lie in the untwisted module of the target shape")
    acc: dict[tuple[int, ...], int] = {}
    for w, coeff in x.terms.items():
        for v, d in theta_apply(c, w).items():
            acc[v] = acc.get(v, 0) + coeff * d
    return FreeElement(c.source, acc)


def theta_rows(c: Correspondoid) -> Iterator[dict[int, int]]:
    """Sparse rows of the tabloid matrix, computed on demand (rows and columns in lexicographic word order)."""
    col = tabloid_index(c.source)
    for w in tabloid_words(c.target):
        yield {col[v]: d for v, d in theta_apply(c, w).items()}


def theta_matrix(c: Correspondoid) -> list[list[int]]:
    width = len(tabloid_words(c.source))
    out = []
    for row in theta_rows(c):
        dense = [0] * width
        for j, d in row.items():
            dense[j] = d
        out.append(dense)
    return out


# ---------------------------------------------------------------------------
# Column distributions


@functools.total_ordering
@dataclass(frozen=True)
class ColumnDistribution:
    """How often each value occurs in each column, keyed by ``(value, column)``."""

    counts: tuple[tuple[tuple[int, int], int], ...]

    def __getitem__(self, key: tuple[int, int]) -> int:
        return dict(self.counts).get(key, 0)

    def compare(self, other: "ColumnDistribution") -> int:
        """Sign of the first difference in ``(value, column)`` lexicographic order."""
        mine, theirs = dict(self.counts), dict(other.counts)
        for key in sorted(set(mine) | set(theirs)):
            a, b = mine.get(key, 0), theirs.get(key, 0)
            if a != b:
                return -1 if a < b else 1
        return 0

    def __lt__(self, other: "ColumnDistribution") -> bool:
        return self.compare(other) < 0


def column_distribution(c: Correspondoid) -> ColumnDistribution:
    acc: Counter = Counter()
    for r in c.rows:
        for k, v in enumerate(r, start=1):
            acc[(v, k)] += 1
    return ColumnDistribution(tuple(sorted(acc.items())))


def shift_correspondoid(lam: Partition, g: int, d: int) -> Correspondoid:
    """The unique semistandard filling for moving ``d`` boxes from column ``g+1`` to column ``g`` of ``lam``.

    It fills the transposed target shape with row indices, except that the ``d``
    cells appended to row g carry the value ``g+1``.  Its content is ``lam'``.
    """
    from .boxshift import derive_mu

    mu = derive_mu(lam, g, g, d)
    lamt, mut = lam.conjugate, mu.conjugate
    rows = []
    for i, p in enumerate(mut.parts, start=1):
        base = lamt.part(i) if i == g else p
        rows.append((i,) * base + (i + 1,) * (p - base))
    return Correspondoid(lamt, mut, tuple(rows))


# ---------------------------------------------------------------------------
# Dualization and transposition


@lru_cache(maxsize=None)
def _dualization(lam: Partition) -> tuple[tuple[int, ...], ...]:
    a = canonical_tableau(lam)
    at = a.transpose()
    basis = specht_basis(lam)
    out = []
    for bt in standard_basis(lam.conjugate):
        tau = permutation_between(at, bt)
        word = bt.transpose().row_word()
        sign = tau.sign
        out.append(tuple(sign * tabloid_coefficient(c, word) for c in basis.tableaux))
    return tuple(out)


def dualization_matrix(lam: Partition) -> list[list[int]]:
    """Matrix of ``S^lam' -> (S^lam)*`` from standard polytabloids to the dual of the standard basis.

    The row of a standard ``lam'``-tableau ``b`` is ``eps_tau`` times the pairing of
    the tabloid of ``b`` transposed with each standard ``lam``-polytabloid, where
    ``tau`` carries the transposed canonical tableau to ``b``.
    """
    return [list(r) for r in _dualization(lam)]


@lru_cache(maxsize=None)
def _dualization_inverse(lam: Partition) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(r) for r in inverse_unimodular(dualization_matrix(lam)))


def transpose_morphism(f: Morphism) -> Morphism:
    """The morphism ``S^mu'/m -> S^lam'/m`` corresponding to ``f: S^lam/m -> S^mu/m``."""
    if f.basis != "standard":
        raise DomainError("transposition needs a morphism between Specht lattices")
    if f.modulus < 2:
        raise DomainError("transposition needs a modulus of at least 2")
    lam, mu, m = f.source, f.target, f.modulus
    middle = matmul(dualization_matrix(mu), transpose([list(r) for r in f.matrix], len(specht_basis(mu))))
    mat = matmul(middle, [list(r) for r in _dualization_inverse(lam)])
    sign = reference_sign(lam)
    return Morphism(mu.conjugate, lam.conjugate, m, tuple(tuple(sign * c % m for c in r) for r in mat), "standard")


def reference_sign(lam: Partition) -> int:
    """Sign of the permutation from the transposed canonical ``lam``-tableau to the canonical ``lam'``-tableau.

    The source side of a transposition is referenced by the transpose of the
    conjugate's canonical tableau while the target keeps its canonical one.
    Transposing twice then uses the transposes of both references, which makes
    transposition an exact involution even for self-conjugate shapes.
    """
    return permutation_between(canonical_tableau(lam).transpose(), canonical_tableau(lam.conjugate)).sign


# ---------------------------------------------------------------------------
# Characteristic two


def two_part(a: int) -> int:
    if a < 1:
        raise DomainError("2-part of a non-positive integer")
    return a & -a


def is_2_convergent(lam: Partition) -> bool:
    """Each column is shorter than the 2-part of one more than the length of the column before it."""
    cols = lam.conjugate.parts
    return all(cols[p] < two_part(cols[p - 1] + 1) for p in range(1, len(cols)))


def _in_column_row_product(a: Tableau, pi: Permutation, columns: list[Permutation]) -> bool:
    row = a.row_word()
    for kappa in columns:
        rest = kappa.inverse() * pi
        if all(row[rest.images[x - 1] - 1] == row[x - 1] for x in range(1, a.n + 1)):
            return True
    return False


def chi_matrix(lam: Partition, limit: int | None = GROUP_SIZE_LIMIT) -> tuple[list[Permutation], list[list[int]]]:
    """Indicator of ``tau sigma^-1`` lying in (column group)(row group) of the canonical tableau.

    Rows are indexed by tau, columns by sigma, both running over the permutations
    carrying the canonical tableau to the standard tableaux (standard-basis order).
    """
    a = canonical_tableau(lam)
    perms = list(standard_basis_permutations(lam))
    cols = column_stabilizer(a, limit)
    mat = [[int(_in_column_row_product(a, tau * sigma.inverse(), cols)) for sigma in perms] for tau in perms]
    return perms, mat


def chi_matrix_by_pairing(lam: Partition) -> tuple[list[Permutation], list[list[int]]]:
    """The same matrix from the pairing of a tabloid with a polytabloid, taken mod 2."""
    a = canonical_tableau(lam)
    perms = list(standard_basis_permutations(lam))
    mat = [
        [tabloid_coefficient(a.act(tau), a.act(sigma).row_word()) % 2 for sigma in perms]
        for tau in perms
    ]
    return perms, mat


def rank_mod_p(rows: Iterable[Sequence[int]], p: int) -> int:
    """Rank over the prime field with p elements."""
    mat = [[c % p for c in r] for r in rows]
    rank, width = 0, len(mat[0]) if mat else 0
    for col in range(width):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col], -1, p)
        mat[rank] = [c * inv % p for c in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                f = mat[i][col]
                mat[i] = [(c - f * d) % p for c, d in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def shift_transpose_via_theta(lam: Partition, g: int, d: int) -> FreeElement:
    """Image of the canonical ``mu'``-polytabloid under the negated filling map for a d-box shift.

    This is an independent route to the transpose of the d-fold box shift at
    column g, through the tabloid module instead of dualization.  The result
    lies in the Specht lattice only modulo the order of the shift, so it is
    returned as a tabloid combination.
    """
    phi = shift_correspondoid(lam, g, d)
    x = polytabloid(canonical_tableau(phi.target))
    return theta_on_element(phi, x).scale(-1)


def tabloid_expansion(v: SpechtVector) -> FreeElement:
    """The tabloid combination of standard coordinates."""
    total = FreeElement(v.shape, {})
    for t, c in zip(standard_basis(v.shape), v.coords):
        if c:
            total = total + polytabloid(t).scale(c)
    return total
