"""Reference computations with known answers, and a runner that checks them.

Every golden is the image of a source polytabloid under some morphism, written
as a combination of target polytabloids, together with the modulus; images are
compared up to a unit of ``Z/m``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .boxshift import build_boxshift_morphism
from .combinatorics import Partition, Permutation, Tableau
from .formats import combination_vector
from .homsolver import Morphism, hom_group, morphism_from_image
from .lattices import specht_dimension, straighten
from .semistandard import chi_matrix, transpose_morphism
from .zlinalg import equal_up_to_unit


def _p(text: str) -> Partition:
    return Partition.parse(text)


# (source, target, reduced modulus, expected group)
HOM_GROUPS: tuple[tuple[str, str, int, str], ...] = (
    ("3,3", "2,2,1,1", 4, "Z/4"),
    ("3,2,2", "3,1,1,1,1", 6, "Z/6"),
    ("3,3,1,1", "2,2,1,1,1,1", 6, "Z/6"),
    ("4,4", "3,3,1,1", 5, "Z/5"),
    ("3,3,2", "2,2,2,1,1", 5, "Z/5"),
    ("3,3,1,1", "2,2,2,2", 3, "Z/3"),
    ("4,3", "2,2,2,1", 4, "Z/4"),
    ("4,4", "2,2,2,2", 4, "Z/4"),
    ("2,2,2,1,1", "1,1,1,1,1,1,1,1", 8, "0"),
)

# (lam, g, k) with the image of the canonical polytabloid and its modulus
SHIFT_IMAGES: dict[str, tuple[str, int, int, int, str]] = {
    "shift_33_to_2211": (
        "3,3", 1, 2, 4,
        "-2[1,5/2,6/3/4] - [1,5/2,4/3/6] - [1,3/2,5/4/6] - [1,6/2,4/5/3] - [1,3/2,6/5/4] - 2[1,3/2,4/5/6]",
    ),
    "shift_322_to_31111": (
        "3,2,2", 1, 1, 3,
        "-2[1,6,7/2/3/4/5] + 2[1,5,7/2/3/4/6] - 2[1,4,7/2/3/5/6]",
    ),
    "shift_3311_to_221111": (
        "3,3,1,1", 1, 2, 6,
        "-2[1,7/2,8/3/4/5/6] - [1,7/2,6/3/4/5/8] - [1,5/2,7/3/4/6/8] - [1,8/2,6/3/4/7/5]"
        " - [1,5/2,8/3/4/7/6] - 2[1,5/2,6/3/4/7/8]",
    ),
    "shift_44_to_3311": (
        "4,4", 1, 3, 5,
        "-2[1,5,7/2,6,8/3/4] - [1,6,7/2,4,8/5/3] - [1,3,7/2,6,8/5/4] - [1,5,7/2,4,8/3/6]"
        " - [1,3,7/2,5,8/4/6] - [1,5,8/2,4,6/7/3] - [1,6,5/2,4,8/7/3] - [1,3,8/2,5,6/7/4]"
        " - [1,3,5/2,6,8/7/4] - [1,5,7/2,4,6/3/8] - [1,6,5/2,4,7/3/8] - [1,3,7/2,5,6/4/8]"
        " - [1,3,5/2,6,7/4/8] - 2[1,3,7/2,4,8/5/6] - [1,3,8/2,4,6/7/5] - [1,3,5/2,4,8/7/6]"
        " - [1,3,7/2,4,6/5/8] - [1,3,5/2,4,7/6/8] - 2[1,3,5/2,4,6/7/8]",
    ),
    "shift_332_to_22211": (
        "3,3,2", 1, 2, 5,
        "-[1,7/2,8/3,6/4/5] - [1,7/2,5/3,8/4/6] - [1,4/2,7/3,8/5/6] - [1,7/2,5/3,6/4/8]"
        " - [1,4/2,7/3,6/5/8] - [1,4/2,5/3,7/6/8] - [1,8/2,5/3,6/7/4] - [1,4/2,8/3,6/7/5]"
        " - [1,4/2,5/3,8/7/6] - 3[1,4/2,5/3,6/7/8]",
    ),
    "shift_3311_to_2222": ("3,3,1,1", 2, 2, 3, "-[1,5/2,6/3,7/4,8]"),
}

# Hom groups that are cyclic of the given order, with a generator image
HOM_GENERATORS: dict[str, tuple[str, str, int, str]] = {
    "hom_43_to_2221": (
        "4,3", "2,2,2,1", 4,
        "2[1,5/2,6/3,7/4] + [1,5/2,4/3,7/6] + [1,3/2,5/4,7/6] + [1,6/2,4/5,7/3] + [1,3/2,6/5,7/4]"
        " + 2[1,3/2,4/5,7/6]",
    ),
    "hom_44_to_2222": (
        "4,4", "2,2,2,2", 4,
        "2[1,5/2,6/3,7/4,8] + [1,5/2,4/3,7/6,8] + [1,3/2,5/4,7/6,8] + [1,6/2,4/5,7/3,8]"
        " + [1,3/2,6/5,7/4,8] + 2[1,3/2,4/5,7/6,8]",
    ),
}

# Transposes: name of the transposed morphism's construction, then its image
TRANSPOSE_IMAGES: dict[str, tuple[str, int, str]] = {
    "transpose_42_to_222": ("shift_33_to_2211", 4, "-[1,4/2,5/3,6](1-(34)) + 2[1,3/2,4/5,6]"),
    "transpose_511_to_331": ("shift_322_to_31111", 3, "-[1,4,6/2,5,7/3] - [1,4,5/2,6,7/3]"),
    "transpose_511_to_331_order_two": (
        "all_ones_322_to_31111",
        2,
        "[1,2,6/3,4,7/5] + [1,4,5/2,6,7/3] + [1,3,5/2,6,7/4] + [1,2,5/3,6,7/4] + [1,3,4/2,6,7/5]"
        " + [1,2,4/3,6,7/5] + [1,2,3/4,6,7/5] + [1,2,5/3,4,7/6] + [1,3,4/2,5,7/6] + [1,2,4/3,5,7/6]"
        " + [1,2,3/4,5,7/6] + [1,2,5/3,4,6/7] + [1,3,4/2,5,6/7] + [1,2,4/3,5,6/7] + [1,2,3/4,5,6/7]",
    ),
    "transpose_62_to_422": (
        "shift_3311_to_221111",
        6,
        "-[1,4,7,8/2,5/3,6](1-(34)) - 2[1,3,7,8/2,4/5,6] - [1,4,6,8/2,5/3,7](1-(34)) - 2[1,3,6,8/2,4/5,7]"
        " - [1,4,5,8/2,6/3,7](1-(34)) - 2[1,3,5,8/2,4/6,7] - [1,4,6,7/2,5/3,8](1-(34)) - 2[1,3,6,7/2,4/5,8]"
        " - [1,4,5,7/2,6/3,8](1-(34)) - 2[1,3,5,7/2,4/6,8] - [1,4,5,6/2,7/3,8](1-(34)) - 2[1,3,5,6/2,4/7,8]",
    ),
    "transpose_422_to_2222": ("shift_44_to_3311", 5, "-[1,5/2,6/3,7/4,8](1-(45)-(46)) - 3[1,4/2,5/3,6/7,8]"),
    "transpose_53_to_332": (
        "shift_332_to_22211",
        5,
        "-[1,4,7/2,5,8/3,6](1-(34)) - 2[1,4,6/2,5,8/3,7](1-(34))(1-(56)) - [1,3,6/2,4,8/5,7](1-(56))"
        " + [1,4,6/2,5,7/3,8](1-(34))(1-(56)) - [1,3,6/2,4,7/5,8](1-(56)) + 2[1,3,5/2,4,6/7,8]",
    ),
    "transpose_44_to_422": (
        "shift_3311_to_2222",
        3,
        "[1,4,6,8/2,5/3,7](1-(34))(1-(56))(1-(78)) - [1,3,6,8/2,4/5,7](1-(56))(1-(78))",
    ),
}


# Characteristic-two coset matrices: the permutation list (row and column order)
# and the rows as bit strings.
CHI_MATRICES: dict[str, tuple[tuple[str, ...], tuple[str, ...]]] = {
    "3,2": (
        ("1", "(45)", "(23)", "(23)(45)", "(2453)"),
        ("10000", "01000", "00100", "00010", "10001"),
    ),
    "3,3,1": (
        (
            "1", "(56)", "(34)", "(34)(56)", "(354)", "(3564)", "(3654)", "(364)", "(37654)", "(3764)", "(234)",
            "(234)(56)", "(2354)", "(23564)", "(23654)", "(2364)", "(237654)", "(23764)", "(24)(356)", "(24)(36)",
            "(24)(376)",
        ),
        (
            "100000000000000000000", "010000000000000000000", "001000000000000000000", "000100000000000000000",
            "000010000000000000000", "000001000000000000000", "000000100000000000000", "000000010000000000000",
            "000000001000000000000", "000000000100000000000", "000000000010000000000", "000000000001000000000",
            "100000000000100000000", "100000000000010000000", "010000000000001000000", "010000000000000100000",
            "110000000000000010000", "010000000000000001000", "001010000000000000100", "000100100000000000010",
            "000100001010000000001",
        ),
    ),
}

# A solution of u * chi = (1, ..., 1) over Z/2 for the shape (3,3,1), in the order above.
CHI_SOLUTION_331 = (0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1)

FIXED_POINT_SIZES = (5, 6, 7, 8)


@lru_cache(maxsize=None)
def reference_morphism(name: str) -> Morphism:
    """The morphism behind a golden, built by the package's own constructions."""
    if name in SHIFT_IMAGES:
        lam, g, k, _, _ = SHIFT_IMAGES[name]
        return build_boxshift_morphism(_p(lam), g, k)
    if name in HOM_GENERATORS:
        lam, mu, m, _ = HOM_GENERATORS[name]
        (gen,) = hom_group(_p(lam), _p(mu), m).generators
        return gen
    if name == "all_ones_322_to_31111":
        lam, mu = _p("3,2,2"), _p("3,1,1,1,1")
        return morphism_from_image(lam, mu, 2, [1] * specht_dimension(mu))
    raise KeyError(name)


def image_of(f: Morphism, source: Tableau) -> list[int]:
    return f.apply(straighten(source))


def canonical_image(f: Morphism) -> list[int]:
    return list(f.generator_image())


def reduce(v, m: int) -> list[int]:
    return [c % m for c in v]


def matches(f: Morphism, golden: str, m: int) -> bool:
    """Whether the image of the canonical polytabloid equals the golden combination up to a unit mod m."""
    target = combination_vector(golden)
    if target.shape != f.target:
        return False
    return equal_up_to_unit(reduce(canonical_image(f), m), reduce(target.coords, m), m)


def chi_matches(shape: str) -> bool:
    """Whether the computed coset matrix equals the golden one, rows and columns keyed by permutation."""
    lam = _p(shape)
    names, rows = CHI_MATRICES[shape]
    perms, mat = chi_matrix(lam)
    expected = [Permutation.parse(lam.n, p) for p in names]
    if sorted(perms, key=str) != sorted(expected, key=str):
        return False
    idx = [perms.index(p) for p in expected]
    return all("".join(str(mat[i][j]) for j in idx) == row for i, row in zip(idx, rows))


def fixed_point_formula(n: int) -> str:
    """Polytabloid formula for the transpose of the two-box map ``S^(2,2,1^(n-4)) -> S^(1^n)``."""
    rest = lambda used: [x for x in range(1, n + 1) if x not in used]  # noqa: E731
    terms = []
    for j in range(4, n + 1):
        first = [1, 3] + rest({1, 2, 3, j})
        terms.append(f"+ {j - 2}[{','.join(map(str, first))}/2,{j}]")
    for i in range(3, n + 1):
        for j in range(i + 1, n + 1):
            first = [1, 2] + rest({1, 2, i, j})
            terms.append(f"- [{','.join(map(str, first))}/{i},{j}]")
    return " ".join(terms).lstrip("+ ")


def fixed_point_modulus(n: int) -> int:
    return n - 1 if (n - 1) % 2 else (n - 1) // 2


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _run(name: str, check: Callable[[], tuple[bool, str]]) -> CheckResult:
    try:
        ok, detail = check()
    except Exception as exc:  # a failing construction is reported, not raised
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")
    return CheckResult(name, ok, detail)


def golden_example_checks() -> list[tuple[str, Callable[[], tuple[bool, str]]]]:
    checks = []
    for lam, mu, m, expected in HOM_GROUPS:
        n = _p(lam).n

        def hom_check(lam=lam, mu=mu, m=m, expected=expected, n=n):
            full = str(hom_group(_p(lam), _p(mu), math.factorial(n)).invariants)
            reduced = str(hom_group(_p(lam), _p(mu), m).invariants)
            return full == reduced == expected, f"n!: {full}, mod {m}: {reduced}"

        checks.append((f"hom_{lam.replace(',', '')}_to_{mu.replace(',', '')}", hom_check))
    for name, (_, _, _, m, golden) in SHIFT_IMAGES.items():
        checks.append((name, lambda name=name, m=m, golden=golden: (matches(reference_morphism(name), golden, m), "")))
    for name, (_, _, m, golden) in HOM_GENERATORS.items():
        checks.append((name, lambda name=name, m=m, golden=golden: (matches(reference_morphism(name), golden, m), "")))
    for name, (base, m, golden) in TRANSPOSE_IMAGES.items():

        def tr_check(base=base, m=m, golden=golden):
            f = reference_morphism(base)
            if f.modulus != m:
                f = Morphism(f.source, f.target, m, tuple(tuple(reduce(r, m)) for r in f.matrix), f.basis)
            ft = transpose_morphism(f)
            back = transpose_morphism(ft)
            return matches(ft, golden, m) and back.matrix == f.matrix, ""

        checks.append((name, tr_check))
    for n in FIXED_POINT_SIZES:

        def fixed_point_check(n=n):
            f = build_boxshift_morphism(Partition((2, 2) + (1,) * (n - 4)), 1, 1)
            m = fixed_point_modulus(n)
            return f.modulus == m and matches(transpose_morphism(f), fixed_point_formula(n), m), f"mod {f.modulus}"

        checks.append((f"fixed_point_transpose_n{n}", fixed_point_check))
    for shape in CHI_MATRICES:
        checks.append((f"chi_matrix_{shape.replace(',', '')}", lambda shape=shape: (chi_matches(shape), "")))
    for name in HOM_GENERATORS:

        def neg_check(name=name):
            f = reference_morphism(name)
            return transpose_morphism(f).matrix == (-f).matrix, ""

        checks.append((f"{name}_transposes_to_negative", neg_check))
    return checks


def verify(suite: str = "paper-examples") -> list[CheckResult]:
    if suite != "paper-examples":
        raise KeyError(f"unknown suite {suite!r}")
    return [_run(name, check) for name, check in golden_example_checks()]
