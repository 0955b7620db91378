"""Box-shift morphisms ``S^lam -> S^mu/m``.

A box shift moves ``d`` boxes from column ``k+1`` of ``lam`` to column ``g``.
For ``d = 2`` the image of the canonical polytabloid is a weighted sum over
double paths: two non-crossing position sequences leading from column ``k+1``
leftwards to the two new cells of column ``g``.  Each path pushes entries one
visited column to the left.  Summing with suitable integral coefficients and
dividing by the gcd ``R`` of those coefficients gives a morphism of order ``m``
modulo ``m``.  For ``g = k`` any ``d`` is allowed and the sum runs over
``d``-subsets of column ``g+1``.

Columns and positions are 1-based throughout.  A pattern records which of the
two paths visit which column of ``[g, k+1]``; it is stored column by column as
pairs of bits ``(path 1, path 2)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .combinatorics import Partition, Tableau, canonical_tableau, partitions, permutation_sign
from .errors import DivisibilityFailure, DomainError, NotAPartition, OrderMismatch
from .homsolver import Morphism, morphism_from_image, morphism_order
from .lattices import SpechtVector, specht_dimension, straighten_sparse

Column = tuple[int, int]
FULL: Column = (1, 1)
EMPTY: Column = (0, 0)
COLUMN_STATES: tuple[Column, ...] = ((1, 1), (1, 0), (0, 1), (0, 0))


# ---------------------------------------------------------------------------
# Problems and numeric data


def derive_mu(lam: Partition, g: int, k: int, d: int = 2) -> Partition:
    """The target shape: ``d`` boxes taken from column ``k+1`` and stacked onto column ``g``."""
    cols = list(lam.conjugate.parts)
    if not (1 <= g <= k < len(cols)):
        raise DomainError(f"need 1 <= g <= k <= {len(cols) - 1}, got g={g}, k={k}")
    if d < 1:
        raise DomainError("the number of moved boxes must be positive")
    if cols[k] < d:
        raise DomainError(f"column {k + 1} has fewer than {d} boxes")
    cols[g - 1] += d
    cols[k] -= d
    if any(a < b for a, b in zip(cols, cols[1:])):
        raise NotAPartition(f"column lengths {cols} are not weakly decreasing")
    return Partition(tuple(c for c in cols if c)).conjugate


@dataclass(frozen=True)
class BoxShiftProblem:
    """Shape ``lam``, source column ``k+1``, target column ``g`` and box count ``d``."""

    lam: Partition
    g: int
    k: int
    d: int = 2
    mu: Partition = field(init=False, compare=False)

    def __post_init__(self):
        if self.d != 2 and self.g != self.k:
            raise DomainError("moving a number of boxes other than two needs adjacent columns (g = k)")
        object.__setattr__(self, "mu", derive_mu(self.lam, self.g, self.k, self.d))

    @classmethod
    def of(cls, lam, g: int, k: int, d: int = 2) -> "BoxShiftProblem":
        if not isinstance(lam, Partition):
            lam = Partition.parse(lam) if isinstance(lam, str) else Partition(tuple(lam))
        return cls(lam, g, k, d)

    def colen(self, j: int) -> int:
        """Length of column j of ``lam`` (0 beyond the diagram)."""
        return self.lam.col(j)

    @property
    def columns(self) -> range:
        return range(self.g, self.k + 2)

    @cached_property
    def x(self) -> dict[int, int]:
        return x_values(self.lam, self.g, self.k)

    def __str__(self) -> str:
        return f"{self.lam} -> {self.mu} (g={self.g}, k={self.k}, d={self.d})"


def x_values(lam: Partition, g: int, k: int) -> dict[int, int]:
    """``X_j = (lam'_j - j) - (lam'_{k+1} - (k+1))`` for ``j`` in ``[g, k+1]``."""
    base = lam.col(k + 1) - (k + 1)
    return {j: lam.col(j) - j - base for j in range(g, k + 2)}


def rising(x: int, j: int) -> int:
    """Rising factorial ``x (x+1) ... (x+j-1)``; 1 for ``j = 0``."""
    out = 1
    for i in range(j):
        out *= x + i
    return out


def box_shift_length(lam: Partition, g: int, k: int, d: int = 2) -> int:
    return lam.col(g) - lam.col(k + 1) + (k + 1) - g + d


def vp(p: int, x: int) -> int:
    """Exponent of the prime p in the nonzero integer x."""
    if x == 0:
        raise DomainError("valuation of zero")
    x, t = abs(x), 0
    while x % p == 0:
        x //= p
        t += 1
    return t


def ilog(p: int, d: int) -> int:
    """Largest t with ``p**t <= d``."""
    if d < 1 or p < 2:
        raise DomainError("ilog needs d >= 1 and p >= 2")
    t, q = 0, p
    while q <= d:
        t += 1
        q *= p
    return t


def _primes_upto(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if all(p % q for q in range(2, math.isqrt(p) + 1))]


def _strip_small_primes(x: int, kmax: int) -> int:
    out = x
    for p in _primes_upto(kmax):
        out //= p ** min(vp(p, x), ilog(p, kmax))
    return out


def gcd_binomials(x: int, kmax: int) -> int:
    """``gcd(C(x,1), ..., C(x,kmax))``, evaluated by the prime-power formula."""
    if not (1 <= kmax <= x):
        raise DomainError("need 1 <= kmax <= x")
    return _strip_small_primes(x, kmax)


# ---------------------------------------------------------------------------
# Weights, patterns, double paths


@dataclass(frozen=True)
class Weight:
    """Number of paths visiting each column ``g, g+1, ..., k+1``."""

    g: int
    values: tuple[int, ...]

    def __post_init__(self):
        v = self.values
        if len(v) < 2 or v[0] != 2 or v[-1] != 2 or any(not 0 <= e <= 2 for e in v):
            raise DomainError(f"invalid weight {v}")

    def __getitem__(self, j: int) -> int:
        return self.values[j - self.g]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.values)) + ")"


@dataclass(frozen=True)
class Pattern:
    """A partial pattern over the columns ``start, start+1, ...``.

    ``cols[t]`` is the pair (path 1 visits, path 2 visits) for column ``start + t``.
    """

    start: int
    cols: tuple[Column, ...]

    def __post_init__(self):
        cols = tuple((int(bool(a)), int(bool(b))) for a, b in self.cols)
        object.__setattr__(self, "cols", cols)

    @classmethod
    def parse(cls, start: int, text: str) -> "Pattern":
        """Parse ``"++,+-,-+,++"``: one pair of signs per column."""
        cols = []
        for part in text.replace(" ", "").strip("()").split(","):
            if len(part) != 2 or set(part) - {"+", "-"}:
                raise DomainError(f"bad column {part!r} in pattern {text!r}")
            cols.append((part[0] == "+", part[1] == "+"))
        return cls(start, tuple(cols))

    @property
    def stop(self) -> int:
        return self.start + len(self.cols) - 1

    def column(self, j: int) -> Column:
        return self.cols[j - self.start]

    def contains(self, path: int, j: int) -> bool:
        """Whether path (1 or 2) visits column j."""
        return bool(self.column(j)[path - 1])

    def count(self, j: int) -> int:
        return sum(self.column(j))

    def weight_values(self) -> tuple[int, ...]:
        return tuple(a + b for a, b in self.cols)

    def weight(self) -> Weight:
        return Weight(self.start, self.weight_values())

    def bitstring(self) -> str:
        """Path-1 bits over the columns, then path-2 bits."""
        return "".join(str(c[0]) for c in self.cols) + "".join(str(c[1]) for c in self.cols)

    def restrict(self, p: int, q: int) -> "Pattern":
        return Pattern(p, self.cols[p - self.start : q - self.start + 1])

    def extend(self, col: Column) -> "Pattern":
        return Pattern(self.start, self.cols + (col,))

    def switch(self, g: int, q: int) -> "Pattern":
        """Exchange the two paths on the columns ``g+1, ..., q-1``."""
        return Pattern(
            self.start,
            tuple((b, a) if g + 1 <= self.start + t <= q - 1 else (a, b) for t, (a, b) in enumerate(self.cols)),
        )

    def __str__(self) -> str:
        return "(" + ",".join("".join("+" if x else "-" for x in c) for c in self.cols) + ")"


@dataclass(frozen=True)
class DoublePath:
    """A pattern together with the row position of each visit.

    ``positions[t]`` holds (row of path 1, row of path 2) in column ``start + t``,
    with ``None`` for a column the path skips.
    """

    pattern: Pattern
    positions: tuple[tuple[int | None, int | None], ...]

    def position(self, path: int, j: int) -> int | None:
        return self.positions[j - self.pattern.start][path - 1]

    def visited(self, path: int) -> list[int]:
        return [j for j in range(self.pattern.start, self.pattern.stop + 1) if self.pattern.contains(path, j)]

    def sign(self) -> int:
        v, w = self.positions[-1]
        return -1 if (v + w) % 2 else 1

    def is_ordered(self) -> bool:
        return all(p1 < p2 for p1, p2 in self.positions[1:-1] if p1 is not None and p2 is not None)

    def switch(self, g: int, q: int) -> "DoublePath":
        """Exchange the two paths on the columns ``g+1, ..., q-1``."""
        start = self.pattern.start
        pos = tuple(
            (b, a) if g + 1 <= start + t <= q - 1 else (a, b) for t, (a, b) in enumerate(self.positions)
        )
        return DoublePath(self.pattern.switch(g, q), pos)

    def __str__(self) -> str:
        def fmt(x):
            return "-" if x is None else str(x)

        return f"{self.pattern} @ " + " ".join(f"{fmt(a)}/{fmt(b)}" for a, b in self.positions)


def _require_two(problem: BoxShiftProblem):
    if problem.d != 2:
        raise DomainError("double paths describe the shift of exactly two boxes")


def enumerate_weights(problem: BoxShiftProblem) -> list[Weight]:
    _require_two(problem)
    g, k = problem.g, problem.k
    ranges = [range(min(2, problem.colen(j)) + 1) for j in range(g + 1, k + 1)]
    return [Weight(g, (2,) + tuple(e) + (2,)) for e in itertools.product(*ranges)]


def _interior_states(e: int) -> tuple[Column, ...]:
    return {0: (EMPTY,), 1: ((1, 0), (0, 1)), 2: (FULL,)}[e]


def enumerate_patterns(problem: BoxShiftProblem, weight: Weight | None = None) -> list[Pattern]:
    """Full patterns over ``[g, k+1]`` (of the given weight), sorted by bit-string."""
    _require_two(problem)
    g, k = problem.g, problem.k
    if weight is None:
        choices = [COLUMN_STATES] * (k - g)
    else:
        choices = [_interior_states(weight[j]) for j in range(g + 1, k + 1)]
    out = [Pattern(g, (FULL,) + tuple(mid) + (FULL,)) for mid in itertools.product(*choices)]
    return sorted(out, key=Pattern.bitstring)


def paths_of_pattern(problem: BoxShiftProblem, pattern: Pattern, ordered: bool = False) -> list[DoublePath]:
    """All (ordered) double paths with exactly the given full pattern."""
    _require_two(problem)
    g, k = problem.g, problem.k
    if pattern.start != g or pattern.stop != k + 1 or pattern.column(g) != FULL or pattern.column(k + 1) != FULL:
        raise DomainError(f"{pattern} is not a full pattern over [{g}, {k + 1}]")
    options = [[(problem.colen(g) + 1, problem.colen(g) + 2)]]
    for j in range(g + 1, k + 1):
        h = problem.colen(j)
        a, b = pattern.column(j)
        if a and b:
            pairs = itertools.combinations(range(1, h + 1), 2) if ordered else itertools.permutations(range(1, h + 1), 2)
            options.append(list(pairs))
        elif a:
            options.append([(i, None) for i in range(1, h + 1)])
        elif b:
            options.append([(None, i) for i in range(1, h + 1)])
        else:
            options.append([(None, None)])
    options.append(list(itertools.combinations(range(1, problem.colen(k + 1) + 1), 2)))
    return [DoublePath(pattern, tuple(pos)) for pos in itertools.product(*options)]


def enumerate_double_paths(problem: BoxShiftProblem, weight: Weight, ordered: bool = False) -> list[DoublePath]:
    return [gamma for xi in enumerate_patterns(problem, weight) for gamma in paths_of_pattern(problem, xi, ordered)]


def apply_double_path(a: Tableau, gamma: DoublePath) -> tuple[Tableau, int]:
    """Push entries leftwards along both paths; return the new tableau and its sign."""
    xi = gamma.pattern
    g, last = xi.start, xi.stop
    lam = a.shape
    cols = [list(a.column(j)) for j in range(1, lam.num_columns + 1)]
    new = [list(c) for c in cols]
    arrivals = []
    for path in (1, 2):
        seq = gamma.visited(path)
        for left, right in zip(seq, seq[1:]):
            x = cols[right - 1][gamma.position(path, right) - 1]
            if left == g:
                arrivals.append(x)
            else:
                new[left - 1][gamma.position(path, left) - 1] = x
    new[g - 1].extend(arrivals)
    v, w = gamma.positions[-1]
    new[last - 1] = [x for i, x in enumerate(cols[last - 1], start=1) if i not in (v, w)]
    new = [c for c in new if c]
    mu = Partition(tuple(len(c) for c in new)).conjugate
    return Tableau.from_columns(mu, new), gamma.sign()


def _accumulate(out: list[int], mu: Partition, b: Tableau, coeff: int):
    for i, c in straighten_sparse(mu, b.rows):
        out[i] += coeff * c


def _sum_paths(problem: BoxShiftProblem, a: Tableau, paths) -> SpechtVector:
    mu = problem.mu
    out = [0] * specht_dimension(mu)
    for gamma in paths:
        b, sign = apply_double_path(a, gamma)
        _accumulate(out, mu, b, sign)
    return SpechtVector(mu, tuple(out))


def f_weight(problem: BoxShiftProblem, a: Tableau, weight: Weight) -> SpechtVector:
    """Signed sum of the polytabloids ``<a^gamma>`` over double paths of the given weight."""
    return _sum_paths(problem, a, enumerate_double_paths(problem, weight))


def f_pattern(problem: BoxShiftProblem, a: Tableau, pattern: Pattern, ordered: bool = False) -> SpechtVector:
    """Signed sum over the (ordered) double paths of exactly the given pattern."""
    return _sum_paths(problem, a, paths_of_pattern(problem, pattern, ordered))


def weight_coefficient(problem: BoxShiftProblem, weight: Weight) -> int:
    x = problem.x
    return math.prod(rising(x[j], 2 - weight[j]) for j in range(problem.g + 1, problem.k + 1))


def f_prime_unreduced(problem: BoxShiftProblem, a: Tableau | None = None) -> SpechtVector:
    """``sum_e prod_j X_j^(2-e_j) f_e(a)`` before division by the redundancy factor."""
    _require_two(problem)
    a = canonical_tableau(problem.lam) if a is None else a
    total = SpechtVector.zero(problem.mu)
    for e in enumerate_weights(problem):
        c = weight_coefficient(problem, e)
        if c:
            total = total + f_weight(problem, a, e).scale(c)
    return total


# ---------------------------------------------------------------------------
# Reduced coefficients


def step_sets(problem: BoxShiftProblem) -> tuple[frozenset[int], frozenset[int]]:
    """Columns ``j`` in ``[g+1, k-1]`` whose successor is equally long, resp. one shorter."""
    zero, one = set(), set()
    for j in range(problem.g + 1, problem.k):
        drop = problem.colen(j) - problem.colen(j + 1)
        if drop == 0:
            zero.add(j)
        elif drop == 1:
            one.add(j)
    return frozenset(zero), frozenset(one)


def components(problem: BoxShiftProblem) -> list[tuple[int, int]]:
    """Maximal intervals ``[p, q]`` of ``[g+1, k]`` with ``[p, q-1]`` made of steps."""
    zero, one = step_sets(problem)
    steps = zero | one
    out, p = [], problem.g + 1
    while p <= problem.k:
        q = p
        while q in steps:
            q += 1
        out.append((p, q))
        p = q + 1
    return out


BULKY_AFTER_EQUAL: frozenset[tuple[Column, Column]] = frozenset(
    {
        ((1, 1), (0, 1)),
        ((1, 1), (1, 0)),
        ((1, 0), (0, 1)),
        ((0, 1), (1, 0)),
        ((1, 0), (0, 0)),
        ((0, 1), (0, 0)),
        ((1, 1), (0, 0)),
    }
)
BULKY_AFTER_DROP: frozenset[tuple[Column, Column]] = frozenset({((1, 1), (0, 0))})


def is_bulky(pattern: Pattern, problem: BoxShiftProblem) -> bool:
    zero, one = step_sets(problem)
    for u in range(pattern.start, pattern.stop):
        pair = (pattern.column(u), pattern.column(u + 1))
        if (u in zero and pair in BULKY_AFTER_EQUAL) or (u in one and pair in BULKY_AFTER_DROP):
            return True
    return False


def _step_equal(x: int) -> dict[tuple[Column, Column], int]:
    return {
        ((1, 1), (1, 1)): x * (x + 1),
        ((0, 1), (1, 1)): x + 1,
        ((1, 0), (1, 1)): x + 1,
        ((0, 1), (0, 1)): (x - 1) * (x + 1),
        ((1, 0), (1, 0)): (x - 1) * (x + 1),
        ((0, 0), (1, 1)): 2,
        ((0, 0), (1, 0)): x - 1,
        ((0, 0), (0, 1)): x - 1,
        ((0, 0), (0, 0)): (x - 1) * x,
    }


def _step_drop(x: int) -> dict[tuple[Column, Column], int]:
    table = {
        ((1, 1), (1, 1)): -x * (x - 3),
        ((1, 1), (0, 1)): x * (x - 2),
        ((1, 1), (1, 0)): x * (x - 2),
    }
    for first in ((1, 0), (0, 1), (0, 0)):
        table[(first, (1, 1))] = 2
        table[(first, (0, 1))] = x - 2
        table[(first, (1, 0))] = x - 2
        table[(first, (0, 0))] = (x - 2) * (x - 1)
    return table


def theta_coefficients(problem: BoxShiftProblem) -> dict[Pattern, int]:
    """Reduced coefficients of all full patterns, built column by column from column g."""
    _require_two(problem)
    g, k, x = problem.g, problem.k, problem.x
    zero, one = step_sets(problem)
    theta = {Pattern(g, (FULL,)): 1}
    for r in range(g, k):
        if r in zero:
            table = _step_equal(x[r])
        elif r in one:
            table = _step_drop(x[r])
        else:
            table = None
        nxt = {}
        for xi, t in theta.items():
            for col in COLUMN_STATES:
                if table is None:
                    c = math.factorial(sum(col)) * rising(x[r + 1], 2 - sum(col))
                else:
                    c = table.get((xi.column(r), col), 0)
                nxt[xi.extend(col)] = t * c
        theta = nxt
    return {xi.extend(FULL): t for xi, t in theta.items()}


def redundancy(problem: BoxShiftProblem) -> int:
    """The factor R dividing every reduced coefficient exactly."""
    _require_two(problem)
    if problem.g == problem.k:
        return 1
    x = problem.x
    zero, one = step_sets(problem)
    out = math.prod(x[j] * (x[j] + 1) for j in zero) * math.prod(x[j] for j in one)
    for p, q in components(problem):
        if all(j in one for j in range(p, q)):
            out *= math.gcd(x[q], 2)
    return abs(out)


def modulus(problem: BoxShiftProblem) -> int:
    """Order of the constructed morphism."""
    g, k, d, x = problem.g, problem.k, problem.d, problem.x
    if g == k:
        return _strip_small_primes(box_shift_length(problem.lam, g, k, d), d)
    _require_two(problem)
    _, one = step_sets(problem)
    p, q = components(problem)[0]
    if all(j in one for j in range(p, q)):
        return (x[g] + 2) // math.gcd(2, x[g], x[g + 1])
    return x[g] + 2


@dataclass(frozen=True)
class ThetaTable:
    problem: BoxShiftProblem
    theta: dict[Pattern, int]
    R: int
    m: int

    def nonzero(self) -> dict[Pattern, int]:
        return {xi: t for xi, t in self.theta.items() if t}

    def to_text(self, include_zero: bool = False) -> str:
        lines = [
            f"{xi.bitstring()}: {t}"
            for xi, t in sorted(self.theta.items(), key=lambda kv: kv[0].bitstring())
            if t or include_zero
        ]
        return "\n".join(lines + [f"R={self.R}", f"m={self.m}"]) + "\n"


def theta_table(lam: Partition, g: int, k: int) -> ThetaTable:
    problem = BoxShiftProblem(lam, g, k, 2)
    if g == k:
        theta = {Pattern(g, (FULL, FULL)): 1}
    else:
        theta = theta_coefficients(problem)
    return ThetaTable(problem, theta, redundancy(problem), modulus(problem))


# ---------------------------------------------------------------------------
# Adjacent columns, any number of boxes


@dataclass(frozen=True)
class DFoldInjection:
    """Injective choice of rows of column ``g+1``; ``values[i]`` goes to new cell ``i+1``."""

    values: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.values)) != len(self.values) or any(v < 1 for v in self.values):
            raise DomainError(f"{self.values} is not an injection into positive rows")

    @property
    def is_monotone(self) -> bool:
        return all(a < b for a, b in zip(self.values, self.values[1:]))

    @property
    def sign(self) -> int:
        base = -1 if sum(self.values) % 2 else 1
        order = sorted(range(len(self.values)), key=lambda i: self.values[i])
        return base * permutation_sign([i + 1 for i in order])


def enumerate_dfold(problem: BoxShiftProblem, injective: bool = False) -> list[DFoldInjection]:
    h = problem.colen(problem.g + 1)
    gen = itertools.permutations if injective else itertools.combinations
    return [DFoldInjection(z) for z in gen(range(1, h + 1), problem.d)]


def dfold_place(a: Tableau, zeta: DFoldInjection, problem: BoxShiftProblem) -> tuple[Tableau, int]:
    """Append the chosen entries of column ``g+1`` to column ``g``; compact column ``g+1``."""
    if problem.g != problem.k:
        raise DomainError("the d-fold place operation needs g = k")
    g = problem.g
    if a.shape != problem.lam or max(zeta.values) > problem.colen(g + 1):
        raise DomainError("injection or tableau does not fit the problem")
    cols = [list(a.column(j)) for j in range(1, a.shape.num_columns + 1)]
    source = cols[g]
    cols[g - 1] = cols[g - 1] + [source[v - 1] for v in zeta.values]
    cols[g] = [x for i, x in enumerate(source, start=1) if i not in zeta.values]
    cols = [c for c in cols if c]
    return Tableau.from_columns(problem.mu, cols), zeta.sign


def f_dfold(problem: BoxShiftProblem, a: Tableau | None = None, injective: bool = False) -> SpechtVector:
    """``sum_zeta eps_zeta <a^zeta>`` over monotone (or, divided by d!, all injective) choices."""
    a = canonical_tableau(problem.lam) if a is None else a
    mu = problem.mu
    out = [0] * specht_dimension(mu)
    for zeta in enumerate_dfold(problem, injective):
        b, sign = dfold_place(a, zeta, problem)
        _accumulate(out, mu, b, sign)
    v = SpechtVector(mu, tuple(out))
    return v.exact_divide(math.factorial(problem.d)) if injective else v


# ---------------------------------------------------------------------------
# Assembly


def generator_image(problem: BoxShiftProblem) -> SpechtVector:
    """Integral image of the canonical polytabloid, before reduction modulo m."""
    if problem.g == problem.k:
        return f_dfold(problem)
    total = f_prime_unreduced(problem)
    R = redundancy(problem)
    if any(c % R for c in total.coords):
        raise DivisibilityFailure(f"the unreduced image is not divisible by R={R}")
    return total.exact_divide(R)


def build_boxshift_morphism(lam: Partition, g: int, k: int, d: int = 2) -> Morphism:
    """The box-shift morphism ``S^lam -> S^mu/m``, verified against all relations and its order."""
    problem = BoxShiftProblem(lam, g, k, d)
    m = modulus(problem)
    x = [c % m for c in generator_image(problem).coords]
    f = morphism_from_image(lam, problem.mu, m, x)
    if m > 1 and morphism_order(f) != m:
        raise OrderMismatch(f"constructed morphism has order {morphism_order(f)}, expected {m}")
    return f


@lru_cache(maxsize=None)
def valid_problems(n: int, d: int | None = 2) -> tuple[BoxShiftProblem, ...]:
    """All box-shift problems on partitions of n moving d boxes, or every d when ``d`` is None.

    Moves of more or fewer than two boxes only exist with g = k.
    """
    out = []
    for lam in partitions(n):
        width = lam.num_columns
        for g in range(1, width):
            for k in range(g, width):
                if d is not None:
                    counts = [d]
                elif g == k:
                    counts = range(1, lam.col(g + 1) + 1)
                else:
                    counts = [2]
                for dd in counts:
                    if dd != 2 and g != k:
                        continue
                    try:
                        out.append(BoxShiftProblem(lam, g, k, dd))
                    except (DomainError, NotAPartition):
                        pass
    return tuple(out)
