"""Text and JSON serialization.

Morphism files look like::

    SRC 3,3
    TGT 2,2,1,1
    MOD 4
    BASIS standard
    0,0,0,2,3,1,1,3,2
    ...

with one row per standard basis element of the source.  Linear combinations of
polytabloids are written as ``-2[1,5/2,6/3/4] + [1,3/2,5/4/6](1-(34))``: an
optional integer coefficient, a tableau in brackets with rows separated by
``/`` (or ``;``), then any number of group-ring factors acting on the right.
"""

from __future__ import annotations

import json
import re
from typing import Iterable

from .combinatorics import FormalPermSum, Partition, Permutation, Tableau, Tabloid
from .errors import DomainError, ParseError
from .homsolver import KIND_OF_BASIS, Morphism, target_dimension
from .lattices import FreeElement, SpechtVector, apply_word, polytabloid, specht_dimension, standard_basis, straighten

# ---------------------------------------------------------------------------
# Morphisms


def morphism_to_text(f: Morphism) -> str:
    lines = [f"SRC {f.source}", f"TGT {f.target}", f"MOD {f.modulus}", f"BASIS {f.basis}"]
    lines += [",".join(map(str, row)) for row in f.matrix]
    return "\n".join(lines) + "\n"


def morphism_from_text(text: str) -> Morphism:
    header: dict[str, str] = {}
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        if key in ("SRC", "TGT", "MOD", "BASIS"):
            header[key] = rest.strip()
            continue
        try:
            rows.append(tuple(int(t) for t in line.split(",")))
        except ValueError as exc:
            raise ParseError(f"bad matrix row {line!r}") from exc
    missing = {"SRC", "TGT", "MOD", "BASIS"} - header.keys()
    if missing:
        raise ParseError(f"morphism file lacks {sorted(missing)}")
    return _morphism_from_fields(header["SRC"], header["TGT"], header["MOD"], header["BASIS"], rows)


def morphism_to_json(f: Morphism) -> str:
    return json.dumps(
        {
            "source": str(f.source),
            "target": str(f.target),
            "modulus": f.modulus,
            "basis": f.basis,
            "matrix": [list(r) for r in f.matrix],
        }
    )


def morphism_from_json(text: str) -> Morphism:
    try:
        data = json.loads(text)
        return _morphism_from_fields(
            data["source"], data["target"], str(data["modulus"]), data["basis"], [tuple(r) for r in data["matrix"]]
        )
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ParseError(f"malformed morphism JSON: {exc}") from exc


def _morphism_from_fields(src: str, tgt: str, mod: str, basis: str, rows) -> Morphism:
    if basis not in KIND_OF_BASIS:
        raise ParseError(f"unknown basis {basis!r}")
    try:
        m = int(mod)
    except ValueError as exc:
        raise ParseError(f"bad modulus {mod!r}") from exc
    widths = {len(r) for r in rows}
    if len(widths) > 1:
        raise ParseError("matrix rows of unequal length")
    lam, mu = Partition.parse(src), Partition.parse(tgt)
    if len(rows) != specht_dimension(lam) or widths != {target_dimension(mu, KIND_OF_BASIS[basis])}:
        raise ParseError(f"matrix size does not match {lam} -> {mu} in the {basis} basis")
    return Morphism(lam, mu, m, tuple(rows), basis)


def read_morphism(path: str) -> Morphism:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return morphism_from_json(text) if text.lstrip().startswith("{") else morphism_from_text(text)


def write_morphism(f: Morphism, path: str, as_json: bool = False):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(morphism_to_json(f) + "\n" if as_json else morphism_to_text(f))


# ---------------------------------------------------------------------------
# Elements


def element_to_text(x: FreeElement) -> str:
    """One ``<coeff> * <row word>`` line per tabloid, in word order."""
    return "".join(f"{c} * {''.join(map(str, w))}\n" for w, c in sorted(x.terms.items()))


def element_from_text(shape: Partition, text: str, alternated: bool = False) -> FreeElement:
    terms: dict[tuple[int, ...], int] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        m = re.fullmatch(r"([+-]?\d+)\s*\*\s*(\d+)", line)
        if not m:
            raise ParseError(f"bad element line {line!r}")
        word = tuple(int(ch) for ch in m.group(2))
        terms[word] = terms.get(word, 0) + int(m.group(1))
    for word in terms:
        Tabloid(word, shape)
    return FreeElement(shape, terms, alternated)


def vector_to_text(v: SpechtVector) -> str:
    return f"{v.modulus}; " + ",".join(map(str, v.coords))


def vector_from_text(shape: Partition, text: str) -> SpechtVector:
    mod, sep, body = text.partition(";")
    if not sep:
        raise ParseError(f"bad vector {text!r}")
    try:
        coords = tuple(int(t) for t in body.split(",") if t.strip())
        return SpechtVector(shape, coords, int(mod))
    except ValueError as exc:
        raise ParseError(f"bad vector {text!r}") from exc


def correspondoid_to_text(rows: Iterable[Iterable[int]]) -> str:
    return ";".join(",".join(map(str, r)) for r in rows)


def correspondoid_rows_from_text(text: str) -> tuple[tuple[int, ...], ...]:
    try:
        return tuple(tuple(int(t) for t in r.split(",")) for r in text.strip().split(";") if r.strip())
    except ValueError as exc:
        raise ParseError(f"bad correspondoid {text!r}") from exc


# ---------------------------------------------------------------------------
# Polytabloid combinations

_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*\*?\s*\[([^\]]+)\]((?:\s*\([^()]*(?:\([^()]*\)[^()]*)*\))*)")
_FACTOR = re.compile(r"\(([^()]*(?:\([^()]*\)[^()]*)*)\)")
_GROUP_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*((?:\(\d+\))+|1)")


def parse_group_ring(n: int, text: str) -> FormalPermSum:
    """Parse ``"1-(34)-(46)"`` or ``"1+2(12)(34)"`` into a group-ring element of S_n."""
    pos, acc = 0, FormalPermSum({})
    text = text.strip()
    while pos < len(text):
        m = _GROUP_TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"bad group-ring element {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = sign * int(m.group(2) or 1)
        acc = acc + FormalPermSum.of((coeff, Permutation.parse(n, m.group(3))))
        pos = m.end()
    return acc


def parse_combination(text: str) -> list[tuple[int, Tableau, list[FormalPermSum]]]:
    """Split a polytabloid combination into (coefficient, tableau, right factors) terms."""
    out, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse combination near {text[pos:pos + 30]!r}")
        if out and m.group(1) is None:
            raise ParseError("terms must be separated by + or -")
        sign = -1 if m.group(1) == "-" else 1
        a = Tableau.parse(m.group(3))
        factors = [parse_group_ring(a.n, body) for body in _FACTOR.findall(m.group(4))]
        out.append((sign * int(m.group(2) or 1), a, factors))
        pos = m.end()
    if not out:
        raise ParseError("empty combination")
    return out


def combination_element(text: str) -> FreeElement:
    """Tabloid expansion of a polytabloid combination."""
    total = None
    for c, a, factors in parse_combination(text):
        x = polytabloid(a)
        for w in factors:
            x = apply_word(x, w)
        x = x.scale(c)
        if total is None:
            total = x
        elif total.shape != x.shape:
            raise DomainError("terms of different shapes")
        else:
            total = total + x
    return total


def combination_vector(text: str) -> SpechtVector:
    """Standard-basis coordinates of a polytabloid combination."""
    return straighten(combination_element(text))


def vector_to_combination(v: SpechtVector) -> str:
    """Write standard coordinates as a combination of standard polytabloids."""
    pieces = []
    for t, c in zip(standard_basis(v.shape), v.coords):
        if c:
            body = "/".join(",".join(map(str, r)) for r in t.rows)
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            pieces.append(f"{sign} {mag}[{body}]")
    if not pieces:
        return "0"
    text = " ".join(pieces)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]
