"""Homomorphisms from a Specht lattice into Specht or tabloid modules modulo m.

``S^lam`` is cyclic, generated by the polytabloid of the canonical tableau, with
defining relations given by :func:`specht_relation_words`.  A morphism into a
target module ``T/m`` is therefore determined by the image x of that generator,
subject to ``x w = 0`` for every relation word w.  :func:`hom_group` solves this
system with :func:`~specht.zlinalg.kernel_mod`.

Targets are named by ``target_kind``: ``"specht"`` (coordinates in the standard
basis), ``"tabloid"`` (coordinates over tabloids in lexicographic order) or
``"alternated"`` (tabloids with the sign-twisted action).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .combinatorics import (
    FormalPermSum,
    Partition,
    Permutation,
    act_on_word,
    canonical_tableau,
)
from .errors import DomainError, GroupSizeError, RelationViolation
from .lattices import (
    FreeElement,
    SpechtVector,
    garnir_word,
    specht_basis,
    straighten_sparse,
)
from .zlinalg import AbelianInvariants, ModularLattice, kernel_from_lattice, vector_order_mod

TARGET_KINDS = ("specht", "tabloid", "alternated")
BASIS_NAMES = {"specht": "standard", "tabloid": "tabloid", "alternated": "alternated"}
KIND_OF_BASIS = {v: k for k, v in BASIS_NAMES.items()}
DIMENSION_LIMIT = 50000


# ---------------------------------------------------------------------------
# Relations


def column_transposition_words(lam: Partition, adjacent_only: bool = False) -> list[FormalPermSum]:
    """Words ``1 + (u,v)`` for u < v in a common column of the canonical tableau."""
    n = lam.n
    ident = Permutation.identity(n)
    out = []
    for col in canonical_tableau(lam).columns:
        for i in range(len(col)):
            for j in range(i + 1, len(col)):
                if adjacent_only and j != i + 1:
                    continue
                out.append(FormalPermSum({ident: 1, Permutation.transposition(n, col[i], col[j]): 1}))
    return out


def garnir_words(lam: Partition) -> list[FormalPermSum]:
    """One-step Garnir words at the canonical tableau, for every admissible column pair and split."""
    conj = lam.conjugate
    out = []
    for p in range(1, lam.num_columns):
        for t in range(1, conj.part(p + 1) + 1):
            s = conj.part(p) + 1 - t
            if s >= 1:
                out.append(garnir_word(lam, p, s, t))
    return out


def specht_relation_words(lam: Partition, minimal: bool = False) -> list[FormalPermSum]:
    """Defining relation words of ``S^lam`` at the canonical tableau.

    With ``minimal`` set, column transpositions are restricted to adjacent
    entries; these generate the same relations.
    """
    return column_transposition_words(lam, adjacent_only=minimal) + garnir_words(lam)


# ---------------------------------------------------------------------------
# Target modules


@lru_cache(maxsize=None)
def tabloid_words(mu: Partition) -> tuple[tuple[int, ...], ...]:
    """All tabloid row words of shape ``mu`` in lexicographic order."""
    out: list[tuple[int, ...]] = []
    counts = list(mu.parts)
    word: list[int] = []

    def rec():
        if len(word) == mu.n:
            out.append(tuple(word))
            return
        for r in range(len(counts)):
            if counts[r]:
                counts[r] -= 1
                word.append(r + 1)
                rec()
                word.pop()
                counts[r] += 1

    rec()
    return tuple(out)


@lru_cache(maxsize=None)
def tabloid_index(mu: Partition) -> dict[tuple[int, ...], int]:
    return {w: i for i, w in enumerate(tabloid_words(mu))}


def target_dimension(mu: Partition, kind: str) -> int:
    if kind == "specht":
        return len(specht_basis(mu))
    if kind in ("tabloid", "alternated"):
        return math.factorial(mu.n) // math.prod(math.factorial(p) for p in mu.parts)
    raise DomainError(f"unknown target kind {kind!r}")


def act_target(mu: Partition, kind: str, x: Sequence[int], sigma: Permutation) -> list[int]:
    """Right action of ``sigma`` on a coordinate vector of the target module (integral)."""
    if kind == "specht":
        basis = specht_basis(mu)
        out = [0] * len(basis)
        for i, v in enumerate(x):
            if v:
                for k, u in straighten_sparse(mu, basis.tableaux[i].act(sigma).rows):
                    out[k] += v * u
        return out
    words = tabloid_words(mu)
    index = tabloid_index(mu)
    sgn = sigma.sign if kind == "alternated" else 1
    out = [0] * len(words)
    imgs = sigma.images
    for i, v in enumerate(x):
        if v:
            out[index[act_on_word(words[i], imgs)]] += sgn * v
    return out


def apply_word_target(mu: Partition, kind: str, x: Sequence[int], w: FormalPermSum) -> list[int]:
    out = [0] * len(x)
    for sigma, c in w.items():
        for k, v in enumerate(act_target(mu, kind, x, sigma)):
            if v:
                out[k] += c * v
    return out


# ---------------------------------------------------------------------------
# Morphisms


@dataclass(frozen=True)
class Morphism:
    """A module map ``S^source/m -> T/m`` given by the images of the standard basis (rows)."""

    source: Partition
    target: Partition
    modulus: int
    matrix: tuple[tuple[int, ...], ...]
    basis: str = "standard"

    def __post_init__(self):
        if self.basis not in KIND_OF_BASIS:
            raise DomainError(f"unknown basis {self.basis!r}")
        m = self.modulus
        mat = tuple(tuple((int(c) % m) if m else int(c) for c in row) for row in self.matrix)
        object.__setattr__(self, "matrix", mat)

    @property
    def target_kind(self) -> str:
        return KIND_OF_BASIS[self.basis]

    def generator_image(self) -> tuple[int, ...]:
        """Image of the polytabloid of the canonical tableau."""
        basis = specht_basis(self.source)
        i = basis.tableau_index[canonical_tableau(self.source).rows]
        return self.matrix[i]

    def entries(self) -> list[int]:
        return [c for row in self.matrix for c in row]

    def is_zero(self) -> bool:
        return not any(self.entries())

    def scale(self, u: int) -> "Morphism":
        return Morphism(self.source, self.target, self.modulus, tuple(tuple(u * c for c in r) for r in self.matrix), self.basis)

    def __neg__(self) -> "Morphism":
        return self.scale(-1)

    def __add__(self, other: "Morphism") -> "Morphism":
        if (self.source, self.target, self.modulus, self.basis) != (other.source, other.target, other.modulus, other.basis):
            raise DomainError("morphisms between different modules")
        return Morphism(
            self.source,
            self.target,
            self.modulus,
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.matrix, other.matrix)),
            self.basis,
        )

    def apply(self, v: SpechtVector) -> list[int]:
        """Image of a source vector as target coordinates."""
        if v.shape != self.source:
            raise DomainError("vector of the wrong shape")
        width = len(self.matrix[0]) if self.matrix else 0
        out = [0] * width
        for c, row in zip(v.coords, self.matrix):
            if c:
                for k, u in enumerate(row):
                    out[k] += c * u
        m = self.modulus
        return [x % m for x in out] if m else out


@dataclass(frozen=True)
class HomGroup:
    source: Partition
    target: Partition
    target_kind: str
    modulus: int
    invariants: AbelianInvariants
    generators: tuple[Morphism, ...]

    def __str__(self) -> str:
        return str(self.invariants)


def _as_coordinates(mu: Partition, kind: str, x) -> list[int]:
    if isinstance(x, SpechtVector):
        if kind != "specht" or x.shape != mu:
            raise DomainError("vector does not belong to the target")
        return list(x.coords)
    if isinstance(x, FreeElement):
        if kind == "specht" or x.shape != mu:
            raise DomainError("element does not belong to the target")
        index = tabloid_index(mu)
        out = [0] * len(index)
        for w, c in x.terms.items():
            out[index[w]] = c
        return out
    return [int(c) for c in x]


def check_relations(lam: Partition, mu: Partition, m: int, x: Sequence[int], kind: str = "specht", words=None):
    """Raise :class:`RelationViolation` unless every relation word kills x modulo m."""
    for w in specht_relation_words(lam) if words is None else words:
        y = apply_word_target(mu, kind, x, w)
        if any(c % m for c in y) if m else any(y):
            raise RelationViolation(f"relation word {w} does not annihilate the image", word=w)


def morphism_from_image(lam: Partition, mu: Partition, m: int, x, target_kind: str = "specht") -> Morphism:
    """Extend an image of the canonical polytabloid to the full morphism, verifying relations and equivariance."""
    if lam.n != mu.n:
        raise DomainError("source and target have different degrees")
    if target_kind not in TARGET_KINDS:
        raise DomainError(f"unknown target kind {target_kind!r}")
    x = _as_coordinates(mu, target_kind, x)
    if len(x) != target_dimension(mu, target_kind):
        raise DomainError("image has the wrong number of coordinates")
    red = (lambda v: [c % m for c in v]) if m else (lambda v: list(v))
    x = red(x)
    check_relations(lam, mu, m, x, target_kind)
    basis = specht_basis(lam)
    rows = [tuple(red(act_target(mu, target_kind, x, tau))) for tau in basis.permutations]
    _check_equivariance(lam, mu, m, rows, target_kind)
    return Morphism(lam, mu, m, tuple(rows), BASIS_NAMES[target_kind])


def _check_equivariance(lam: Partition, mu: Partition, m: int, rows, kind: str):
    basis = specht_basis(lam)
    n = lam.n
    for i in range(1, n):
        s = Permutation.transposition(n, i, i + 1)
        for b, t in enumerate(basis.tableaux):
            lhs = act_target(mu, kind, rows[b], s)
            rhs = [0] * len(lhs)
            for k, c in straighten_sparse(lam, t.act(s).rows):
                for j, v in enumerate(rows[k]):
                    if v:
                        rhs[j] += c * v
            if any(((a - b2) % m) if m else (a - b2) for a, b2 in zip(lhs, rhs)):
                raise RelationViolation(f"equivariance fails for the transposition ({i},{i + 1})")


def morphism_order(f: Morphism) -> int:
    """Additive order of ``f`` as an element of the Hom group."""
    if f.modulus < 1:
        raise DomainError("order is defined for a positive modulus")
    return vector_order_mod(f.entries(), f.modulus)


# ---------------------------------------------------------------------------
# Solving for Hom


def hom_group(
    lam: Partition,
    mu: Partition,
    m: int,
    target_kind: str = "specht",
    max_dimension: int | None = None,
) -> HomGroup:
    """The group of module maps ``S^lam -> T/m`` with generators (one per invariant factor)."""
    if lam.n != mu.n:
        raise DomainError("source and target have different degrees")
    if m < 2:
        raise DomainError("modulus must be at least 2")
    if target_kind not in TARGET_KINDS:
        raise DomainError(f"unknown target kind {target_kind!r}")
    dim = target_dimension(mu, target_kind)
    limit = DIMENSION_LIMIT if max_dimension is None else max_dimension
    if dim > limit:
        raise GroupSizeError(f"target dimension {dim} exceeds the bound {limit}")
    if target_kind == "specht":
        kernel, lift = _solve_specht(lam, mu, m)
    else:
        kernel, lift = _solve_tabloid(lam, mu, m, target_kind)
    gens = []
    for y in kernel.generators:
        x = lift(y)
        gens.append(morphism_from_image(lam, mu, m, x, target_kind))
    return HomGroup(lam, mu, target_kind, m, kernel.invariants, tuple(gens))


def _solve_specht(lam: Partition, mu: Partition, m: int):
    basis = specht_basis(mu)
    d = len(basis)
    lat = ModularLattice(d, m)
    for w in specht_relation_words(lam, minimal=True):
        # column j of the matrix of w: sum over b of x_b (b w)_j
        cols: dict[int, dict[int, int]] = {}
        for sigma, c in w.items():
            for b, t in enumerate(basis.tableaux):
                for k, u in straighten_sparse(mu, t.act(sigma).rows):
                    col = cols.setdefault(k, {})
                    col[b] = col.get(b, 0) + c * u
        for k in sorted(cols):
            vec = [0] * d
            for b, v in cols[k].items():
                vec[b] = v
            if any(v % m for v in vec):
                lat.insert(vec)
        if lat.complete:
            break
    return kernel_from_lattice(lat), (lambda y: list(y))


def _solve_tabloid(lam: Partition, mu: Partition, m: int, kind: str):
    words = tabloid_words(mu)
    index = tabloid_index(mu)
    n = lam.n
    twist = kind == "alternated"
    # anti-invariance under the column group: x_{w s} = theta x_w for the adjacent
    # column transpositions s; theta = -1 untwisted, +1 twisted
    theta = 1 if twist else -1
    gens = [
        Permutation.transposition(n, col[i], col[i + 1]).images
        for col in canonical_tableau(lam).columns
        for i in range(len(col) - 1)
    ]
    orbit_of = [-1] * len(words)
    sign_of = [0] * len(words)
    conflicts: list[int] = []
    orbits: list[list[int]] = []
    for start in range(len(words)):
        if orbit_of[start] >= 0:
            continue
        k = len(orbits)
        members = [start]
        orbit_of[start], sign_of[start] = k, 1
        conflict = False
        stack = [start]
        while stack:
            i = stack.pop()
            for imgs in gens:
                j = index[act_on_word(words[i], imgs)]
                sj = theta * sign_of[i]
                if orbit_of[j] < 0:
                    orbit_of[j], sign_of[j] = k, sj
                    members.append(j)
                    stack.append(j)
                elif sign_of[j] != sj:
                    conflict = True
        orbits.append(members)
        if conflict:
            conflicts.append(k)
    K = len(orbits)
    lat = ModularLattice(K, m)
    for k in conflicts:
        vec = [0] * K
        vec[k] = 2
        lat.insert(vec)
    for w in garnir_words(lam):
        cols: dict[int, dict[int, int]] = {}
        for sigma, c in w.items():
            c0 = c * (sigma.sign if twist else 1)
            imgs = sigma.images
            for k, members in enumerate(orbits):
                for i in members:
                    j = index[act_on_word(words[i], imgs)]
                    col = cols.setdefault(j, {})
                    col[k] = col.get(k, 0) + c0 * sign_of[i]
        for j in sorted(cols):
            vec = [0] * K
            for k, v in cols[j].items():
                vec[k] = v
            if any(v % m for v in vec):
                lat.insert(vec)
        if lat.complete:
            break

    def lift(y):
        x = [0] * len(words)
        for k, members in enumerate(orbits):
            if y[k]:
                for i in members:
                    x[i] = (y[k] * sign_of[i]) % m
        return x

    return kernel_from_lattice(lat), lift
