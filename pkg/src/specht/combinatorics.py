"""Partitions, permutations, tableaux, tabloids and their symmetric-group actions.

Permutations act on the right: ``x(st)`` is ``(xs)t``, implemented by
:meth:`Permutation.__mul__` (``s * t`` applies ``s`` first).  A permutation acts
on a tableau by relabelling its entries and on a tabloid by moving values
between rows accordingly.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DomainError, GroupSizeError, NotAPartition, ParseError

GROUP_SIZE_LIMIT = 10**7


# ---------------------------------------------------------------------------
# Partitions


@dataclass(frozen=True, order=True)
class Partition:
    """A partition stored as a weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise NotAPartition(f"non-positive part in {self.parts!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise NotAPartition(f"parts of {self.parts!r} are not weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"3,2,2"``; exponent shorthand ``"2,1^4"`` is also accepted."""
        text = text.strip().strip("()")
        if not text:
            return cls(())
        parts: list[int] = []
        try:
            for token in text.split(","):
                token = token.strip()
                if "^" in token:
                    base, exp = token.split("^")
                    parts.extend([int(base)] * int(exp))
                else:
                    parts.append(int(token))
        except ValueError as exc:
            raise ParseError(f"cannot parse partition {text!r}") from exc
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (1-based), zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def col(self, j: int) -> int:
        """The length of column j (1-based), zero beyond the first row."""
        return self.conjugate.part(j)

    @property
    def conjugate(self) -> "Partition":
        return transpose_partition(self)

    @property
    def num_columns(self) -> int:
        return self.part(1)

    def cells(self) -> list[tuple[int, int]]:
        """Cells as (row, column) pairs in row-major order."""
        return [(i + 1, j + 1) for i, p in enumerate(self.parts) for j in range(p)]

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


def transpose_partition(lam: Partition) -> Partition:
    """The transposed partition: its j-th part counts the parts of ``lam`` that are at least j."""
    return _transpose(lam.parts)


@lru_cache(maxsize=None)
def _transpose(parts: tuple[int, ...]) -> Partition:
    if not parts:
        return Partition(())
    return Partition(tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1)))


def partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse lexicographic order, (n) first."""
    out: list[Partition] = []

    def rec(remaining: int, largest: int, prefix: list[int]):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for p in range(min(remaining, largest), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


def dominates(lam: Partition, mu: Partition) -> bool:
    """Dominance order: every partial sum of ``lam`` is at least that of ``mu``."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam.part(i + 1)
        b += mu.part(i + 1)
        if a < b:
            return False
    return True


def hook_length_count(lam: Partition) -> int:
    """Number of standard tableaux of shape ``lam`` by the hook length formula."""
    conj = lam.conjugate
    prod = 1
    for i, j in lam.cells():
        prod *= (lam.part(i) - j) + (conj.part(j) - i) + 1
    return math.factorial(lam.n) // prod


# ---------------------------------------------------------------------------
# Permutations


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n} stored by its images ``images[x-1] = x sigma``."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise DomainError(f"{self.images!r} is not a permutation of 1..{len(imgs)}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        imgs = list(range(1, n + 1))
        for cyc in cycles:
            cyc = list(cyc)
            if len(set(cyc)) != len(cyc) or any(not 1 <= c <= n for c in cyc):
                raise DomainError(f"invalid cycle {cyc!r} for n={n}")
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                imgs[a - 1] = b
        return cls(tuple(imgs))

    @classmethod
    def transposition(cls, n: int, u: int, v: int) -> "Permutation":
        return cls.from_cycles(n, [(u, v)])

    @classmethod
    def parse(cls, n: int, text: str) -> "Permutation":
        """Parse cycle notation such as ``"(2453)(16)"`` or ``"(2,4,5,3)"``; ``"1"`` is the identity."""
        text = text.replace(" ", "")
        if text in ("", "1", "id", "()"):
            return cls.identity(n)
        cycles = []
        if not re.fullmatch(r"(\([0-9,]+\))+", text):
            raise ParseError(f"cannot parse permutation {text!r}")
        for body in re.findall(r"\(([0-9,]+)\)", text):
            if "," in body:
                cycles.append([int(t) for t in body.split(",")])
            else:
                cycles.append([int(ch) for ch in body])
        return cls.from_cycles(n, cycles)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """``self * other`` applies ``self`` first, then ``other``."""
        if self.n != other.n:
            raise DomainError("permutations of different degrees")
        o = other.images
        return Permutation(tuple(o[x - 1] for x in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return Permutation(tuple(inv))

    @property
    def sign(self) -> int:
        return permutation_sign(self.images)

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest element."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, start=1))

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "1"
        sep = "," if self.n > 9 else ""
        return "".join("(" + sep.join(map(str, c)) + ")" for c in cyc)


def permutation_sign(images: Sequence[int]) -> int:
    """Sign of the permutation with the given image sequence, via cycle lengths."""
    n = len(images)
    seen = [False] * n
    parity = 0
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = images[j] - 1
            length += 1
        parity ^= (length - 1) & 1
    return -1 if parity else 1


@lru_cache(maxsize=None)
def signed_permutations(length: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All permutations of ``range(length)`` as 0-based image tuples with their signs."""
    out = []
    for p in itertools.permutations(range(length)):
        out.append((p, permutation_sign([x + 1 for x in p])))
    return tuple(out)


# ---------------------------------------------------------------------------
# Tableaux and tabloids


@dataclass(frozen=True)
class Tableau:
    """A bijective filling of a Young diagram with 1..n, stored row by row.

    ``entry(j, i)`` addresses column j and row i, both 1-based.
    """

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if tuple(len(r) for r in rows) != self.shape.parts:
            raise DomainError(f"rows {rows!r} do not fit shape {self.shape}")
        n = self.shape.n
        if sorted(x for r in rows for x in r) != list(range(1, n + 1)):
            raise DomainError(f"entries of {rows!r} are not 1..{n}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Tableau":
        rows = tuple(tuple(r) for r in rows)
        return cls(Partition(tuple(len(r) for r in rows)), rows)

    @classmethod
    def from_columns(cls, shape: Partition, columns: Sequence[Sequence[int]]) -> "Tableau":
        rows = [[0] * p for p in shape.parts]
        if len(columns) != shape.num_columns:
            raise DomainError("wrong number of columns")
        for j, col in enumerate(columns):
            if len(col) != shape.col(j + 1):
                raise DomainError(f"column {j + 1} has the wrong length")
            for i, x in enumerate(col):
                rows[i][j] = x
        return cls(shape, tuple(tuple(r) for r in rows))

    @classmethod
    def parse(cls, text: str) -> "Tableau":
        """Parse ``"1,3,5;2,4,6"`` (rows separated by semicolons). Slashes also separate rows."""
        try:
            rows = [
                tuple(int(x) for x in r.split(",") if x.strip())
                for r in re.split(r"[;/]", text.strip().strip("[]"))
                if r.strip()
            ]
            return cls.from_rows(rows)
        except (ValueError, DomainError, NotAPartition) as exc:
            raise ParseError(f"cannot parse tableau {text!r}: {exc}") from exc

    @property
    def n(self) -> int:
        return self.shape.n

    def entry(self, j: int, i: int) -> int:
        """Entry in column j, row i."""
        return self.rows[i - 1][j - 1]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.rows[i][j - 1] for i in range(self.shape.col(j)))

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.column(j) for j in range(1, self.shape.num_columns + 1))

    def position(self, x: int) -> tuple[int, int]:
        """(column, row) of value x."""
        for i, r in enumerate(self.rows):
            if x in r:
                return r.index(x) + 1, i + 1
        raise DomainError(f"{x} not in tableau")

    def row_word(self) -> tuple[int, ...]:
        """The row index of each value 1..n."""
        word = [0] * self.n
        for i, r in enumerate(self.rows, start=1):
            for x in r:
                word[x - 1] = i
        return tuple(word)

    def transpose(self) -> "Tableau":
        """The tableau of the transposed shape whose rows are the columns of this one."""
        return Tableau(self.shape.conjugate, self.columns)

    def act(self, sigma: Permutation) -> "Tableau":
        if sigma.n != self.n:
            raise DomainError("size mismatch between permutation and tableau")
        img = sigma.images
        return Tableau(self.shape, tuple(tuple(img[x - 1] for x in r) for r in self.rows))

    def __str__(self) -> str:
        return ";".join(",".join(map(str, r)) for r in self.rows)


@dataclass(frozen=True, order=True)
class Tabloid:
    """A row-equivalence class of tableaux, keyed by its row word ``rowOf(1..n)``."""

    word: tuple[int, ...]
    shape: Partition = field(compare=False)

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        counts = [0] * len(self.shape)
        for r in word:
            if not 1 <= r <= len(self.shape):
                raise DomainError(f"row index {r} outside shape {self.shape}")
            counts[r - 1] += 1
        if tuple(counts) != self.shape.parts:
            raise DomainError(f"word {word!r} does not have row sizes {self.shape}")
        object.__setattr__(self, "word", word)

    @classmethod
    def from_word(cls, word: Sequence[int]) -> "Tabloid":
        word = tuple(int(x) for x in word)
        counts = [0] * (max(word) if word else 0)
        for r in word:
            counts[r - 1] += 1
        return cls(word, Partition(tuple(counts)))

    @classmethod
    def parse(cls, text: str) -> "Tabloid":
        text = text.strip()
        try:
            if "," in text:
                word = [int(t) for t in text.split(",")]
            else:
                word = [int(ch) for ch in text]
            return cls.from_word(word)
        except (ValueError, DomainError, NotAPartition) as exc:
            raise ParseError(f"cannot parse tabloid {text!r}") from exc

    def row_of(self, x: int) -> int:
        return self.word[x - 1]

    def rows(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in self.shape.parts]
        for x, r in enumerate(self.word, start=1):
            out[r - 1].append(x)
        return tuple(tuple(r) for r in out)

    def act(self, sigma: Permutation) -> "Tabloid":
        return Tabloid(act_on_word(self.word, sigma.images), self.shape)

    def __str__(self) -> str:
        return word_to_text(self.word)


def word_to_text(word: Sequence[int]) -> str:
    if all(r < 10 for r in word):
        return "".join(map(str, word))
    return ",".join(map(str, word))


def act_on_word(word: Sequence[int], images: Sequence[int]) -> tuple[int, ...]:
    """Right action on a row word: the value x sigma lands in the row that held x."""
    new = [0] * len(word)
    for x, r in enumerate(word):
        new[images[x] - 1] = r
    return tuple(new)


def tabloid_of(a: Tableau) -> Tabloid:
    return Tabloid(a.row_word(), a.shape)


def canonical_tableau(lam: Partition) -> Tableau:
    """The tableau filled with 1..n down each column, columns left to right."""
    columns = []
    x = 1
    for j in range(1, lam.num_columns + 1):
        length = lam.col(j)
        columns.append(tuple(range(x, x + length)))
        x += length
    return Tableau.from_columns(lam, columns)


def is_standard(a: Tableau) -> bool:
    """Whether entries increase along every row and down every column."""
    rows = a.rows
    for i, r in enumerate(rows):
        for j in range(len(r)):
            if j + 1 < len(r) and r[j] > r[j + 1]:
                return False
            if i + 1 < len(rows) and j < len(rows[i + 1]) and r[j] > rows[i + 1][j]:
                return False
    return True


def standard_tableaux(lam: Partition) -> list[Tableau]:
    """All standard tableaux of shape ``lam`` (unordered enumeration)."""
    out: list[Tableau] = []
    parts = lam.parts
    rows: list[list[int]] = [[] for _ in parts]

    def rec(x: int):
        if x > lam.n:
            out.append(Tableau(lam, tuple(tuple(r) for r in rows)))
            return
        for i, p in enumerate(parts):
            if len(rows[i]) < p and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(x)
                rec(x + 1)
                rows[i].pop()

    rec(1)
    return out


def permutation_between(a: Tableau, b: Tableau) -> Permutation:
    """The permutation sigma with ``a.act(sigma) == b``."""
    if a.shape != b.shape:
        raise DomainError("tableaux of different shapes")
    imgs = [0] * a.n
    for ra, rb in zip(a.rows, b.rows):
        for x, y in zip(ra, rb):
            imgs[x - 1] = y
    return Permutation(tuple(imgs))


def act(sigma: Permutation, x):
    """Right action of ``sigma`` on a tableau or tabloid."""
    if isinstance(x, (Tableau, Tabloid)):
        if sigma.n != x.shape.n:
            raise DomainError("size mismatch between permutation and object")
        return x.act(sigma)
    raise TypeError(f"cannot act on {type(x).__name__}")


# ---------------------------------------------------------------------------
# Stabilizers


def _check_group_size(order: int, limit: int | None):
    limit = GROUP_SIZE_LIMIT if limit is None else limit
    if order > limit:
        raise GroupSizeError(f"group of order {order} exceeds the bound {limit}")


def subset_group(n: int, blocks: Sequence[Sequence[int]], limit: int | None = None) -> list[Permutation]:
    """All permutations of 1..n preserving each block setwise and fixing the rest."""
    order = math.prod(math.factorial(len(b)) for b in blocks)
    _check_group_size(order, limit)
    base = list(range(1, n + 1))
    out = []
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        imgs = base[:]
        for block, perm in zip(blocks, choice):
            for x, y in zip(block, perm):
                imgs[x - 1] = y
        out.append(Permutation(tuple(imgs)))
    return out


def column_stabilizer(a: Tableau, limit: int | None = None) -> list[Permutation]:
    """All permutations preserving every column of ``a`` setwise."""
    return subset_group(a.n, a.columns, limit)


def row_stabilizer(a: Tableau, limit: int | None = None) -> list[Permutation]:
    """All permutations preserving every row of ``a`` setwise."""
    return subset_group(a.n, a.rows, limit)


# ---------------------------------------------------------------------------
# Formal sums of permutations


@dataclass(frozen=True)
class FormalPermSum:
    """An element of the integral group ring, as a map permutation -> coefficient."""

    terms: Mapping[Permutation, int]

    def __post_init__(self):
        clean = {p: int(c) for p, c in self.terms.items() if c}
        degrees = {p.n for p in clean}
        if len(degrees) > 1:
            raise DomainError("permutations of different degrees in one sum")
        object.__setattr__(self, "terms", clean)

    @classmethod
    def of(cls, *pairs: tuple[int, Permutation]) -> "FormalPermSum":
        acc: dict[Permutation, int] = {}
        for c, p in pairs:
            acc[p] = acc.get(p, 0) + c
        return cls(acc)

    @classmethod
    def identity(cls, n: int, coeff: int = 1) -> "FormalPermSum":
        return cls({Permutation.identity(n): coeff})

    def __add__(self, other: "FormalPermSum") -> "FormalPermSum":
        acc = dict(self.terms)
        for p, c in other.terms.items():
            acc[p] = acc.get(p, 0) + c
        return FormalPermSum(acc)

    def __neg__(self) -> "FormalPermSum":
        return FormalPermSum({p: -c for p, c in self.terms.items()})

    def __sub__(self, other: "FormalPermSum") -> "FormalPermSum":
        return self + (-other)

    def __mul__(self, other):
        """Group-ring product (``x * y`` applies the terms of x first) or scaling by an int."""
        if isinstance(other, int):
            return FormalPermSum({p: c * other for p, c in self.terms.items()})
        acc: dict[Permutation, int] = {}
        for p, c in self.terms.items():
            for q, d in other.terms.items():
                r = p * q
                acc[r] = acc.get(r, 0) + c * d
        return FormalPermSum(acc)

    __rmul__ = __mul__

    def __len__(self) -> int:
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for p, c in sorted(self.terms.items(), key=lambda pc: pc[0].images):
            pieces.append(f"{c:+d}*{p}")
        return " ".join(pieces)
