"""Command-line front end.

Exit codes: 0 success, 2 unparsable input, 3 arguments outside the domain of a
computation, 4 a golden comparison failed.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import boxshift, corpus
from .combinatorics import Partition
from .errors import DomainError, GroupSizeError, NotAPartition, NotInSpechtLattice, ParseError, SpechtError
from .formats import combination_vector, read_morphism, vector_to_combination, write_morphism
from .homsolver import hom_group
from .lattices import SpechtVector
from .semistandard import transpose_morphism

EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_MISMATCH = 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def parse_partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except NotAPartition as exc:
        raise CliError(str(exc), EXIT_DOMAIN) from exc
    except (ParseError, ValueError) as exc:
        raise CliError(f"cannot read partition {text!r}", EXIT_PARSE) from exc


def parse_modulus(text: str, n: int) -> int:
    """An integer, or ``n!`` for the factorial of the degree."""
    if text.strip() == "n!":
        return math.factorial(n)
    try:
        return int(text)
    except ValueError as exc:
        raise CliError(f"cannot read modulus {text!r}", EXIT_PARSE) from exc


def _name(p: Partition) -> str:
    return "".join(map(str, p.parts)) if max(p.parts) < 10 else "-".join(map(str, p.parts))


def cmd_hom(args) -> dict:
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    m = parse_modulus(args.mod, lam.n)
    group = hom_group(lam, mu, m, args.target)
    files = []
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for i, f in enumerate(group.generators, start=1):
        path = out_dir / f"hom_{_name(lam)}_to_{_name(mu)}_{i}.{'json' if args.json else 'txt'}"
        write_morphism(f, str(path), as_json=args.json)
        files.append(str(path))
    return {"source": str(lam), "target": str(mu), "modulus": m, "group": str(group.invariants), "files": files}


def cmd_boxshift(args) -> dict:
    lam = parse_partition(args.lam)
    problem = boxshift.BoxShiftProblem(lam, args.g, args.k, args.d)
    f = boxshift.build_boxshift_morphism(lam, args.g, args.k, args.d)
    image = SpechtVector(f.target, tuple(f.generator_image()))
    report = {
        "source": str(lam),
        "target": str(problem.mu),
        "x": {str(j): v for j, v in sorted(problem.x.items())},
        "box_shift_length": boxshift.box_shift_length(lam, args.g, args.k, args.d),
        "modulus": f.modulus,
        "image": vector_to_combination(image),
    }
    if args.d == 2:
        table = boxshift.theta_table(lam, args.g, args.k)
        report["R"] = table.R
        if args.emit_theta:
            report["theta"] = {xi.bitstring(): t for xi, t in sorted(table.nonzero().items(), key=lambda kv: kv[0].bitstring())}
    elif args.emit_theta:
        raise CliError("coefficient tables exist only for two-box shifts", EXIT_DOMAIN)
    if args.out:
        write_morphism(f, args.out, as_json=args.json)
        report["file"] = args.out
    return report


def cmd_transpose(args) -> dict:
    try:
        f = read_morphism(args.inp)
    except OSError as exc:
        raise CliError(f"cannot read {args.inp}: {exc.strerror}", EXIT_PARSE) from exc
    ft = transpose_morphism(f)
    write_morphism(ft, args.out, as_json=args.json)
    image = SpechtVector(ft.target, tuple(ft.generator_image()))
    return {"source": str(ft.source), "target": str(ft.target), "modulus": ft.modulus,
            "image": vector_to_combination(image), "file": args.out}


def cmd_straighten(args) -> dict:
    try:
        v = combination_vector(args.tableau)
    except NotInSpechtLattice as exc:
        raise CliError(str(exc), EXIT_DOMAIN) from exc
    if args.lam is not None and parse_partition(args.lam) != v.shape:
        raise CliError(f"tableau has shape {v.shape}, not {args.lam}", EXIT_DOMAIN)
    return {"shape": str(v.shape), "coordinates": list(v.coords), "combination": vector_to_combination(v)}


def cmd_verify(args) -> dict:
    results = corpus.verify(args.suite)
    return {"suite": args.suite, "results": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]}


def _print_text(command: str, report: dict):
    if command == "verify":
        for r in report["results"]:
            extra = f"  ({r['detail']})" if r["detail"] else ""
            print(f"{'PASS' if r['passed'] else 'FAIL'} {r['name']}{extra}")
        return
    if command == "hom":
        print(report["group"])
        for path in report["files"]:
            print(f"wrote {path}")
        return
    if command == "boxshift":
        print(f"mu = {report['target']}")
        print("X = " + ", ".join(f"X_{j}={v}" for j, v in report["x"].items()))
        print(f"m0 = {report['box_shift_length']}")
        if "R" in report:
            print(f"R = {report['R']}")
        print(f"m = {report['modulus']}")
        for bits, t in report.get("theta", {}).items():
            print(f"{bits}: {t}")
        print(f"image: {report['image']}")
    elif command == "transpose":
        print(f"{report['source']} -> {report['target']} mod {report['modulus']}")
        print(f"image: {report['image']}")
    elif command == "straighten":
        print(",".join(map(str, report["coordinates"])))
        print(report["combination"])
    if report.get("file"):
        print(f"wrote {report['file']}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="specht", description="Homomorphisms between Specht lattices modulo m.")
    parser.add_argument("--json", action="store_true", help="print reports and write morphism files as JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hom", help="invariant factors and generators of a Hom group")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--mod", required=True, help="modulus, or n! for the factorial of the degree")
    p.add_argument("--target", choices=("specht", "tabloid", "alternated"), default="specht")
    p.add_argument("--out-dir", default=".", help="directory for generator files")

    p = sub.add_parser("boxshift", help="build a box-shift morphism")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--emit-theta", action="store_true")
    p.add_argument("--out", help="morphism file to write")

    p = sub.add_parser("transpose", help="transpose a morphism file")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("straighten", help="standard coordinates of a polytabloid combination")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--tableau", required=True, help="e.g. [1,2/3] or -2[1,3/2](1-(23))")

    p = sub.add_parser("verify", help="run the golden example corpus")
    p.add_argument("--suite", default="paper-examples", choices=("paper-examples",))
    return parser


COMMANDS = {
    "hom": cmd_hom,
    "boxshift": cmd_boxshift,
    "transpose": cmd_transpose,
    "straighten": cmd_straighten,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = COMMANDS[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, NotAPartition, GroupSizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SpechtError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        _print_text(args.command, report)
    if args.command == "verify" and not all(r["passed"] for r in report["results"]):
        return EXIT_MISMATCH
    return 0


if __name__ == "__main__":
    sys.exit(main())
