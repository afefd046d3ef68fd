"""Command-line front end.

Exit codes: 0 success (an unsolvable target is a result, not an error),
1 property failure, 2 usage or parse error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from pathlib import Path

from . import domination, gf2
from .formats import ParseError, parse_edge_list, parse_graph6
from .graph import Graph, VertexSet
from .verify import run_verification

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_USAGE = 2
EXIT_IO = 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def load_graph(path: str, fmt: str | None) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}", EXIT_IO) from exc
    if fmt is None:
        fmt = "g6" if path.endswith(".g6") else "edges"
    try:
        if fmt == "g6":
            first = next((ln for ln in text.splitlines() if ln.strip()), "")
            return parse_graph6(first)
        return parse_edge_list(text)
    except ParseError as exc:
        raise CliError(f"{path}: {exc}", EXIT_USAGE) from exc


def _fmt_set(s: VertexSet) -> str:
    return " ".join(map(str, s.one_based())) or "(empty)"


def _report_dict(g: Graph) -> dict:
    rep = domination.parity_theorem_check(g)
    checks: dict[str, str] = {
        "parity_theorem": "ok" if rep.odd_parity == rep.rank_parity else "FAIL",
        "odd_degree_intersection": "ok" if rep.odd_degree_intersection_parity == rep.nullity % 2 else "FAIL",
    }
    for c in domination.corollary_suite(g):
        checks[c.claim] = c.marker
    return {
        "order": rep.order,
        "rank": rep.rank,
        "nullity": rep.nullity,
        "odd_dominating": rep.odd_dominating.one_based(),
        "odd_parity": rep.odd_parity,
        "rank_parity": rep.rank_parity,
        "always_solvable": rep.always_solvable,
        "null_vertices": rep.null_vertices.one_based(),
        "null_differences": {str(v + 1): nd for v, nd in enumerate(rep.null_differences)},
        "odd_degree_intersection_parity": rep.odd_degree_intersection_parity,
        "checks": checks,
    }


def cmd_analyze(args) -> int:
    g = load_graph(args.path, args.format)
    if g.n < 1:
        raise CliError("graph has no vertices", EXIT_USAGE)
    d = _report_dict(g)
    if args.json:
        print(json.dumps(d, sort_keys=True))
        return EXIT_OK
    print(f"order: {d['order']}")
    print(f"rank: {d['rank']}")
    print(f"nullity: {d['nullity']}")
    print(f"odd dominating set: {' '.join(map(str, d['odd_dominating'])) or '(empty)'}")
    status = "OK" if d["odd_parity"] == d["rank_parity"] else "MISMATCH"
    print(f"pr(|S|)=pr(ρ)={d['odd_parity']} {status}")
    print(f"always solvable: {'yes' if d['always_solvable'] else 'no'}")
    print(f"null vertices: {' '.join(map(str, d['null_vertices'])) or '(none)'}")
    print("  v  nd(v)")
    for v, nd in d["null_differences"].items():
        print(f"{v:>3}  {nd:>5}")
    print("checks:")
    for name, marker in d["checks"].items():
        print(f"  {name}: {marker}")
    return EXIT_OK


def _parse_target(spec: str, n: int) -> VertexSet:
    try:
        idx = [int(tok) for tok in spec.replace(",", " ").split()]
    except ValueError as exc:
        raise CliError(f"bad target spec {spec!r}: expected comma-separated vertex numbers", EXIT_USAGE) from exc
    for v in idx:
        if not 1 <= v <= n:
            raise CliError(f"target vertex {v} out of range 1..{n}", EXIT_USAGE)
    return VertexSet.of(n, (v - 1 for v in idx))


def cmd_solve(args) -> int:
    g = load_graph(args.path, args.format)
    if args.all_off:
        basis = domination.even_dominating_basis(g)
        if args.json:
            print(json.dumps({"nullity": len(basis), "kernel_basis": [b.one_based() for b in basis]}))
        elif not basis:
            print("(only the empty set)")
        else:
            for b in basis:
                print(_fmt_set(b))
        return EXIT_OK
    target = VertexSet.full(g.n) if args.all_on else _parse_target(args.target, g.n)
    sol = domination.solve_parity(g, target)
    if args.json:
        print(
            json.dumps(
                {
                    "target": target.one_based(),
                    "solvable": sol.solvable,
                    "solution": None if sol.solution is None else sol.solution.one_based(),
                    "nullity": sol.nullity,
                }
            )
        )
    else:
        print("unsolvable" if sol.solution is None else _fmt_set(sol.solution))
    return EXIT_OK


def cmd_verify(args) -> int:
    summary = run_verification(max_n=args.max_n, trials=args.trials, seed=args.seed)
    if args.json:
        out = {
            "ok": summary.ok,
            "properties": {k: {"passed": t.passed, "total": t.total} for k, t in summary.tallies.items()},
            "counterexample": None
            if summary.counterexample is None
            else {"property": summary.counterexample[0], "input": summary.counterexample[1]},
        }
        print(json.dumps(out))
    else:
        width = max(map(len, summary.tallies), default=0)
        for name, t in summary.tallies.items():
            print(f"{name:<{width}}  {t.passed}/{t.total}")
        if summary.counterexample:
            name, witness = summary.counterexample
            print(f"FAILED {name}; first counterexample:")
            print(witness.rstrip("\n"))
        else:
            print("all properties hold")
    return EXIT_OK if summary.ok else EXIT_PROPERTY


def _median_time(fn, reps: int) -> float:
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def cmd_bench(args) -> int:
    if args.size < 1 or args.reps < 1:
        raise CliError("--size and --reps must be at least 1", EXIT_USAGE)
    m = gf2.Gf2Matrix.random(args.size, args.size, args.seed)
    b = gf2.Gf2Vector.from_bits(gf2.Gf2Matrix.random(1, args.size, args.seed + 1).row(0))
    results = {
        "rank": _median_time(lambda: gf2.rank(m), args.reps),
        "solve": _median_time(lambda: gf2.solve(m, b), args.reps),
        "invert": _median_time(lambda: gf2.invert(m), args.reps),
    }
    if args.json:
        print(json.dumps({"size": args.size, "reps": args.reps, "median_seconds": results}))
    else:
        print(f"size {args.size}x{args.size}, {args.reps} reps, seed {args.seed}")
        for op, t in results.items():
            print(f"  {op:<7} {t:10.4f} s")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["edges", "g6"], default=argparse.SUPPRESS)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="paritydom", description="Odd dominating sets and GF(2) nullity of graphs.")
    parser.add_argument("--format", choices=["edges", "g6"], default=None, help="input format (default: by extension)")
    parser.add_argument("--json", action="store_true", default=False, help="machine-readable output")
    parser.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="rank, nullity, odd dominating set, null vertices")
    p.add_argument("path")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("solve", parents=[common], help="find a set with prescribed neighbourhood parities")
    p.add_argument("path")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--target", help="1-based vertices that must see an odd count, e.g. 1,3")
    grp.add_argument("--all-on", action="store_true", help="target every vertex (odd dominating set)")
    grp.add_argument("--all-off", action="store_true", help="print a basis of the even dominating sets")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", parents=[common], help="check the parity identities on graph sweeps")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--trials", type=int, default=300)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="time rank/solve/invert on random matrices")
    p.add_argument("--size", type=int, default=1024)
    p.add_argument("--reps", type=int, default=3)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
