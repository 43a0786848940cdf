"""Command-line frontend.

Subcommands: gen (families, products, joins), compute (certified
solvers), srg (strong resolving graph emission), oracle (exhaustive
baseline), check (law suites).  Graphs travel as edge-list files:
optional '#' comment lines, one "n m" header line, then m lines "u v"
with 0 <= u < v < n; writers emit edges sorted lexicographically.

Exit codes: 0 success, 1 law failure, 2 parse or input error,
3 disconnected input where connectivity is required, 4 size cap hit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .errors import (
    DisconnectedError,
    GenposError,
    SizeError,
    SpecError,
)
from .families import FamilySpec, generate, join, product
from .graphs import Graph, build_graph
from .laws import run_suite
from .position import VARIANTS, brute_force, solve
from .srg import strong_resolving_graph

_EXIT_LAW_FAILURE = 1
_EXIT_INPUT = 2
_EXIT_DISCONNECTED = 3
_EXIT_SIZE = 4


def read_graph(path: str) -> Graph:
    """Parse an edge-list file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc}") from exc
    lines = [
        line.strip()
        for line in raw.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise SpecError(f"{path}: no data lines")
    header = lines[0].split()
    if len(header) != 2:
        raise SpecError(f"{path}: header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise SpecError(f"{path}: non-integer header {lines[0]!r}") from exc
    if n < 0 or m < 0:
        raise SpecError(f"{path}: negative count in header")
    if len(lines) - 1 != m:
        raise SpecError(f"{path}: header says {m} edges, found {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise SpecError(f"{path}: bad edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise SpecError(f"{path}: non-integer edge {line!r}") from exc
        if not (0 <= u < v < n):
            raise SpecError(f"{path}: edge {line!r} violates 0 <= u < v < n={n}")
        edges.append((u, v))
    try:
        return build_graph(n, edges)
    except (GenposError, IndexError) as exc:
        raise SpecError(f"{path}: {exc}") from exc


def format_graph(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines += [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def write_graph(G: Graph, path: str | None) -> None:
    text = format_graph(G)
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_gen(args) -> int:
    if args.family:
        G, _ = generate(FamilySpec.parse(args.family))
    else:
        if not (args.a and args.b):
            raise SpecError("product and join generation need both -a and -b")
        A, _ = generate(FamilySpec.parse(args.a))
        B, _ = generate(FamilySpec.parse(args.b))
        G = join(A, B) if args.join else product(A, B, args.product)
    write_graph(G, args.output)
    return 0


def _solve_one(G: Graph, invariant: str, exhaustive: bool, max_n: int):
    if exhaustive:
        return brute_force(G, invariant, max_n=max_n)
    return solve(G, invariant)


def _emit_values(G: Graph, args, exhaustive: bool = False, max_n: int = 18) -> int:
    if args.invariant == "all":
        values = {}
        for variant in ("gp", "outer", "total", "dual"):
            values[variant] = _solve_one(G, variant, exhaustive, max_n).value
        if args.json:
            print(json.dumps(values))
        elif args.quiet:
            for variant in ("gp", "outer", "total", "dual"):
                print(values[variant])
        else:
            for variant in ("gp", "outer", "total", "dual"):
                print(f"{variant} = {values[variant]}")
        return 0
    start = time.perf_counter()
    cert = _solve_one(G, args.invariant, exhaustive, max_n)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    witness = sorted(cert.witness)
    if args.json:
        print(
            json.dumps(
                {
                    "graph": {"n": G.n, "m": G.m},
                    "invariant": cert.variant,
                    "value": cert.value,
                    "witness": witness,
                    "method": cert.method,
                    "elapsed_ms": round(elapsed_ms, 3),
                }
            )
        )
    elif args.quiet:
        print(cert.value)
    else:
        print(f"{cert.variant} = {cert.value}")
        print(f"witness = {' '.join(map(str, witness))}")
        print(f"method = {cert.method}")
    return 0


def _cmd_compute(args) -> int:
    return _emit_values(read_graph(args.input), args)


def _cmd_oracle(args) -> int:
    return _emit_values(
        read_graph(args.input), args, exhaustive=True, max_n=args.max_n
    )


def _cmd_srg(args) -> int:
    write_graph(strong_resolving_graph(read_graph(args.input)), args.output)
    return 0


def _cmd_check(args) -> int:
    reports = run_suite(args.suite, args.seed)
    failures = [r for r in reports if not r.passed]
    if args.json:
        print(
            json.dumps(
                {
                    "suite": args.suite,
                    "seed": args.seed,
                    "checks": len(reports),
                    "failures": len(failures),
                    "reports": [r.to_dict() for r in reports],
                }
            )
        )
    else:
        for r in reports:
            if r.passed:
                print(f"PASS {r.law} @ {r.instance}")
            else:
                print(f"FAIL {r.law} @ {r.instance}: expected {r.expected}; {r.actual}")
                if r.counterexample is not None:
                    print(f"  counterexample: {json.dumps(r.counterexample)}")
        print(f"{len(reports)} checks, {len(failures)} failures")
    return _EXIT_LAW_FAILURE if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genpos",
        description="exact general position invariants of connected graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a named family, product, or join")
    kind = gen.add_mutually_exclusive_group(required=True)
    kind.add_argument("--family", metavar="SPEC", help="family spec, e.g. theta:2,3,3")
    kind.add_argument(
        "--product",
        choices=("cartesian", "direct", "strong"),
        help="product of the -a and -b graphs",
    )
    kind.add_argument(
        "--join", action="store_true", help="join of the -a and -b graphs"
    )
    gen.add_argument("-a", metavar="SPEC", help="first factor family spec")
    gen.add_argument("-b", metavar="SPEC", help="second factor family spec")
    gen.add_argument("-o", "--output", metavar="FILE", help="write here, default stdout")
    gen.set_defaults(func=_cmd_gen)

    compute = sub.add_parser("compute", help="solve one invariant with certificate")
    compute.add_argument(
        "--invariant", required=True, choices=VARIANTS + ("all",)
    )
    compute.add_argument("-i", "--input", required=True, metavar="FILE")
    compute.add_argument("--json", action="store_true")
    compute.add_argument("--quiet", action="store_true", help="value only")
    compute.set_defaults(func=_cmd_compute)

    srg = sub.add_parser("srg", help="emit the strong resolving graph")
    srg.add_argument("-i", "--input", required=True, metavar="FILE")
    srg.add_argument("-o", "--output", metavar="FILE", help="write here, default stdout")
    srg.set_defaults(func=_cmd_srg)

    oracle = sub.add_parser("oracle", help="exhaustive subset-enumeration baseline")
    oracle.add_argument(
        "--invariant", required=True, choices=VARIANTS + ("all",)
    )
    oracle.add_argument("-i", "--input", required=True, metavar="FILE")
    oracle.add_argument("--max-n", type=int, default=18, dest="max_n")
    oracle.add_argument("--json", action="store_true")
    oracle.add_argument("--quiet", action="store_true", help="value only")
    oracle.set_defaults(func=_cmd_oracle)

    check = sub.add_parser("check", help="run a law suite")
    check.add_argument(
        "--suite",
        required=True,
        choices=("structural", "sufficient", "products", "families", "all"),
    )
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--json", action="store_true")
    check.set_defaults(func=_cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage, 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_INPUT
    except DisconnectedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_DISCONNECTED
    except SizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_SIZE
    except GenposError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
