"""Exact integer linear algebra: Smith normal form, modular kernels, abelian invariants.

Matrices are lists of rows of Python ints.  Kernels are taken on the left:
``kernel_mod(A, m)`` describes the row vectors x with ``x A = 0 (mod m)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError

IntMatrix = list[list[int]]


def identity(k: int) -> IntMatrix:
    return [[int(i == j) for j in range(k)] for i in range(k)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> IntMatrix:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    if any(len(r) != inner for r in A):
        raise DomainError("dimension mismatch in matrix product")
    out = []
    for row in A:
        acc = [0] * cols
        for k, a in enumerate(row):
            if a:
                bk = B[k]
                for j in range(cols):
                    acc[j] += a * bk[j]
        out.append(acc)
    return out


def transpose(A: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
    if not A:
        return [[] for _ in range(cols or 0)]
    return [list(c) for c in zip(*A)]


def determinant(A: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if any(len(r) != n for r in A):
        raise DomainError("determinant of a non-square matrix")
    if n == 0:
        return 1
    M = [list(r) for r in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def inverse_unimodular(A: Sequence[Sequence[int]]) -> IntMatrix:
    """Integral inverse of a unimodular matrix, obtained from its Smith form."""
    sf = snf(A)
    k = len(A)
    if any(sf.D[i][i] != 1 for i in range(k)):
        raise DomainError("matrix is not unimodular")
    # U A V = I, hence A^{-1} = V U.
    return matmul(sf.V, sf.U)


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithForm:
    """Unimodular U, V and diagonal D with ``U A V = D`` and d_1 | d_2 | ..."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def snf(A: Sequence[Sequence[int]]) -> SmithForm:
    """Smith normal form with pivots of smallest absolute value, ties broken row-major."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if any(len(r) != cols for r in A):
        raise DomainError("ragged matrix")
    M = [list(map(int, r)) for r in A]
    U = identity(rows)
    V = identity(cols)

    def swap_rows(i, j):
        if i != j:
            M[i], M[j] = M[j], M[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for r in M:
                r[i], r[j] = r[j], r[i]
            for r in V:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):
        # row_dst -= q * row_src
        if q:
            Ms, Md = M[src], M[dst]
            for c in range(cols):
                if Ms[c]:
                    Md[c] -= q * Ms[c]
            Us, Ud = U[src], U[dst]
            for c in range(rows):
                if Us[c]:
                    Ud[c] -= q * Us[c]

    def add_col(dst, src, q):
        # col_dst -= q * col_src
        if q:
            for r in M:
                if r[src]:
                    r[dst] -= q * r[src]
            for r in V:
                if r[src]:
                    r[dst] -= q * r[src]

    for t in range(min(rows, cols)):
        best = None
        for i in range(t, rows):
            Mi = M[i]
            for j in range(t, cols):
                v = Mi[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            done = True
            p = M[t][t]
            for i in range(t + 1, rows):
                if M[i][t]:
                    add_row(i, t, M[i][t] // p)
                    if M[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if M[t][j]:
                    add_col(j, t, M[t][j] // p)
                    if M[t][j]:
                        done = False
            if not done:
                # re-pivot on the smallest nonzero entry of row t or column t
                cand = [(abs(M[i][t]), i, t) for i in range(t, rows) if M[i][t]]
                cand += [(abs(M[t][j]), t, j) for j in range(t + 1, cols) if M[t][j]]
                _, i, j = min(cand)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if M[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, -1)
        if M[t][t] < 0:
            M[t] = [-x for x in M[t]]
            U[t] = [-x for x in U[t]]
    return SmithForm(U, M, V)


# ---------------------------------------------------------------------------
# Abelian groups


@dataclass(frozen=True)
class AbelianInvariants:
    """A finitely generated abelian group Z^free_rank + sum of Z/f for the invariant factors f."""

    factors: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        facs = tuple(int(f) for f in self.factors if abs(f) != 1)
        if any(f <= 1 for f in facs):
            raise DomainError(f"invariant factors must exceed 1: {self.factors}")
        if any(b % a for a, b in zip(facs, facs[1:])):
            raise DomainError(f"invariant factors do not form a divisibility chain: {facs}")
        object.__setattr__(self, "factors", facs)

    @classmethod
    def from_orders(cls, orders: Iterable[int], free_rank: int = 0) -> "AbelianInvariants":
        """Invariant factors of a direct sum of cyclic groups of the given orders."""
        primes: dict[int, list[int]] = {}
        for o in orders:
            for p, e in _factorize(o).items():
                primes.setdefault(p, []).append(p**e)
        if not primes:
            return cls((), free_rank)
        length = max(len(v) for v in primes.values())
        facs = [1] * length
        for powers in primes.values():
            powers.sort()
            for k, q in enumerate(powers):
                facs[length - len(powers) + k] *= q
        return cls(tuple(f for f in facs if f > 1), free_rank)

    @property
    def order(self) -> int | None:
        """The group order, or None when infinite."""
        return None if self.free_rank else math.prod(self.factors)

    def elementary_divisors(self) -> list[int]:
        out = []
        for f in self.factors:
            out.extend(p**e for p, e in sorted(_factorize(f).items()))
        return sorted(out)

    def p_rank(self, p: int) -> int:
        """Dimension of the p-torsion over the field with p elements (free part included)."""
        return self.free_rank + sum(1 for f in self.factors if f % p == 0)

    def __str__(self) -> str:
        pieces = [f"Z/{f}" for f in self.factors] + ["Z"] * self.free_rank
        return " x ".join(pieces) if pieces else "0"


def _factorize(n: int) -> dict[int, int]:
    n = abs(n)
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# Modular kernels


@dataclass(frozen=True)
class Kernel:
    """Generators (one per invariant factor) of a left kernel, and its structure."""

    generators: tuple[tuple[int, ...], ...]
    invariants: AbelianInvariants
    modulus: int

    def __iter__(self):
        return iter((self.generators, self.invariants))


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a x + b y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


class ModularLattice:
    """Echelon basis of the span of inserted vectors plus m Z^r.

    Row i of the basis has zeros before position i and a positive divisor of m
    at position i.  Entries after the pivot are kept reduced modulo m.
    """

    def __init__(self, r: int, m: int):
        if m <= 0:
            raise DomainError("modulus must be positive")
        self.r, self.m = r, m
        self.basis = [None] * r  # type: list[list[int] | None]
        self._full = 0

    def pivot(self, i: int) -> int:
        b = self.basis[i]
        return self.m if b is None else b[i]

    @property
    def complete(self) -> bool:
        """Whether the lattice is all of Z^r."""
        return self._full == self.r

    def insert(self, vec: Sequence[int]):
        m = self.m
        pending = [[x % m for x in vec]]
        while pending:
            self._insert_one(pending.pop(), pending)
        return self

    def _insert_one(self, v: list[int], pending: list[list[int]]):
        m, r = self.m, self.r
        for i in range(r):
            vi = v[i]
            if not vi:
                continue
            b = self.basis[i]
            if b is None:
                b = [0] * r
                b[i] = m
            bi = b[i]
            if bi == 1:
                # pivot is a unit: clear v[i] directly
                if vi:
                    for j in range(i + 1, r):
                        if b[j]:
                            v[j] = (v[j] - vi * b[j]) % m
                v[i] = 0
                continue
            g, x, y = _ext_gcd(bi, vi)
            p, q = bi // g, vi // g
            new_b = [0] * r
            new_v = [0] * r
            new_b[i] = g
            for j in range(i + 1, r):
                bj, wj = b[j], v[j]
                if bj or wj:
                    new_b[j] = (x * bj + y * wj) % m
                    new_v[j] = (p * wj - q * bj) % m
            if g == 1:
                self._full += 1
            elif g != bi:
                # (m/g) times the new row vanishes at i; its tail must lie in the lower rows
                tail = [((m // g) * c) % m for c in new_b]
                if any(tail):
                    pending.append(tail)
            self.basis[i] = new_b
            v = new_v

    def matrix(self) -> IntMatrix:
        out = []
        for i in range(self.r):
            b = self.basis[i]
            out.append(b if b is not None else [self.m if j == i else 0 for j in range(self.r)])
        return out


def kernel_mod(A: Sequence[Sequence[int]], m: int, rows: int | None = None) -> Kernel:
    """Structure and generators of ``{x : x A = 0 (mod m)}``; ``m = 0`` means over Z.

    ``rows`` gives the number of rows when ``A`` has no columns.
    """
    if m < 0:
        raise DomainError("modulus must be non-negative")
    r = len(A) if rows is None else rows
    if A and len(A) != r:
        raise DomainError("row count mismatch")
    if m == 0:
        return _kernel_integral(A, r)
    if m == 1:
        return Kernel((), AbelianInvariants(), 1)
    lat = ModularLattice(r, m)
    cols = len(A[0]) if A else 0
    for j in range(cols):
        lat.insert([A[i][j] for i in range(r)])
        if lat.complete:
            break
    return kernel_from_lattice(lat)


def kernel_from_lattice(lat: ModularLattice) -> Kernel:
    """Annihilator in (Z/m)^r of the lattice described by ``lat``."""
    m = lat.m
    if lat.complete:
        return Kernel((), AbelianInvariants(), m)
    H = lat.matrix()  # rows span the lattice; x must satisfy x H^T = 0 mod m
    sf = snf(transpose(H))
    gens = []
    orders = []
    for i, d in enumerate(sf.diagonal):
        g = math.gcd(d, m)
        if g > 1:
            gens.append(tuple(((m // g) * c) % m for c in sf.U[i]))
            orders.append(g)
    return _assemble(gens, orders, m)


def _assemble(gens: list[tuple[int, ...]], orders: list[int], m: int) -> Kernel:
    pairs = sorted(zip(orders, gens))
    gens = [normalize_generator(v, m) for _, v in pairs]
    return Kernel(tuple(gens), AbelianInvariants(tuple(o for o, _ in pairs)), m)


def _kernel_integral(A: Sequence[Sequence[int]], r: int) -> Kernel:
    if not A or not A[0]:
        gens = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
        return Kernel(gens, AbelianInvariants((), r), 0)
    sf = snf(A)
    rank = sf.rank
    gens = tuple(tuple(row) for row in sf.U[rank:])
    return Kernel(gens, AbelianInvariants((), r - rank), 0)


def vector_order_mod(x: Sequence[int], m: int) -> int:
    """Additive order of a residue vector modulo m."""
    if m < 1:
        raise DomainError("modulus must be positive")
    g = m
    for c in x:
        g = math.gcd(g, c)
    return m // g


def normalize_generator(x: Sequence[int], m: int) -> tuple[int, ...]:
    """The lexicographically least unit multiple of x mod m, a canonical form for the orbit under units."""
    x = tuple(c % m for c in x)
    if not any(x):
        return x
    return min(tuple((u * c) % m for c in x) for u in range(1, max(m, 2)) if math.gcd(u, m) == 1)


def equal_up_to_unit(x: Sequence[int], y: Sequence[int], m: int) -> bool:
    """Whether u x = y (mod m) for some unit u."""
    if len(x) != len(y):
        return False
    return normalize_generator(x, m) == normalize_generator(y, m)


def unit_between(x: Sequence[int], y: Sequence[int], m: int) -> int | None:
    """A unit u with u x = y (mod m), or None."""
    for u in range(1, max(m, 2)):
        if math.gcd(u, m) == 1 and all((u * a - b) % m == 0 for a, b in zip(x, y)):
            return u
    return None
