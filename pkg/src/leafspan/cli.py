"""Command-line front end: generate, solve, verify, and benchmark.

Exit codes: 0 success, 1 validation or certificate failure, 2 usage error,
3 I/O or parse error.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .branching import Branching
from .errors import ParseError, TooLarge
from .graph import Digraph
from .instances import (
    gen_adversarial_family,
    gen_random_rooted_dag,
    read_instance,
    write_dot,
    write_instance,
)
from .packing import EXACT_PACKER, GREEDY_PACKER
from .solvers import (
    SolveReport,
    exact_max_leaves,
    expansion_baseline,
    max_leaves,
    max_leaves_packing,
)
from .verify import read_solution, verify_solution, write_solution

ALGORITHMS = ("maxleaves", "expansion2", "w3dm-greedy", "w3dm-exact", "exact")

CSV_HEADER = [
    "instance",
    "algorithm",
    "n",
    "leaves",
    "lb_lemma1",
    "ub_lemma2",
    "ub_lemma3",
    "opt",
    "ratio",
    "millis",
]


def _run_algorithm(d: Digraph, algo: str) -> tuple[Branching, SolveReport]:
    if algo == "maxleaves":
        return max_leaves(d)
    if algo == "expansion2":
        return expansion_baseline(d)
    if algo == "w3dm-greedy":
        return max_leaves_packing(d, GREEDY_PACKER)
    if algo == "w3dm-exact":
        return max_leaves_packing(d, EXACT_PACKER)
    if algo == "exact":
        objective = "leaf_weight" if d.vertex_weights is not None else "leaves"
        value, t = exact_max_leaves(d, objective)
        report = SolveReport(
            algorithm="exact",
            leaf_count=t.leaf_count,
            certificate_ok=True,
        )
        if d.vertex_weights is not None:
            report.leaf_weight = value
        return t, report
    raise ValueError(f"unknown algorithm {algo!r}")


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.generator == "random":
        d = gen_random_rooted_dag(args.n, args.p, args.seed)
        provenance = f"random(n={args.n}, p={args.p}, seed={args.seed})"
    else:
        d = gen_adversarial_family(args.k)
        provenance = f"adversarial(k={args.k})"
    write_instance(d, args.out, provenance=provenance)
    return 0


def _cmd_solve(args: argparse.Namespace) -> int:
    d = read_instance(args.input)
    t, report = _run_algorithm(d, args.algo)
    write_solution(args.output, report, list(t.parent))
    if args.dot:
        write_dot(t, args.dot)
    if not report.certificate_ok:
        print(f"certificate failed for {args.input}", file=sys.stderr)
        return 1
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    d = read_instance(args.instance)
    solution = read_solution(args.solution)
    problems = verify_solution(d, solution)
    if problems:
        for p in problems:
            print(f"verify: {p}", file=sys.stderr)
        return 1
    print(f"{args.solution}: OK")
    return 0


def _bench_row(path: Path, d: Digraph, algo: str) -> dict:
    start = time.perf_counter()
    t, report = _run_algorithm(d, algo)
    millis = (time.perf_counter() - start) * 1000.0
    row = {
        "instance": path.name,
        "algorithm": algo,
        "n": d.vertex_count,
        "leaves": report.leaf_count,
        "lb_lemma1": str(report.lb_lemma1) if report.lb_lemma1 is not None else "",
        "ub_lemma2": str(report.ub_lemma2) if report.ub_lemma2 is not None else "",
        "ub_lemma3": str(report.ub_lemma3) if report.ub_lemma3 is not None else "",
        "opt": "",
        "ratio": "",
        "millis": f"{millis:.3f}",
    }
    try:
        opt, _ = exact_max_leaves(d)
        row["opt"] = str(opt)
        row["ratio"] = str(Fraction(opt, report.leaf_count))
    except TooLarge:
        pass  # never estimated: the cell stays empty
    return row


def _cmd_bench(args: argparse.Namespace) -> int:
    directory = Path(args.input_dir)
    if not directory.is_dir():
        print(f"bench: {directory} is not a directory", file=sys.stderr)
        return 3
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    for a in algos:
        if a not in ALGORITHMS:
            print(f"bench: unknown algorithm {a!r}", file=sys.stderr)
            return 2
    rows = []
    for path in sorted(directory.glob("*.json")):
        d = read_instance(path)
        for algo in algos:
            rows.append(_bench_row(path, d, algo))
    with open(args.csv, "w", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=CSV_HEADER)
        writer.writeheader()
        writer.writerows(rows)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leafspan",
        description="Leaf-maximizing spanning arborescences on rooted DAGs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate an instance file")
    gen.add_argument("--generator", choices=("random", "adversarial"), required=True)
    gen.add_argument("--n", type=int, default=10, help="vertex count (random)")
    gen.add_argument("--p", type=float, default=0.2, help="extra-arc probability (random)")
    gen.add_argument("--seed", type=int, default=0, help="RNG seed (random)")
    gen.add_argument("--k", type=int, default=1, help="family parameter (adversarial)")
    gen.add_argument("--out", required=True, help="output instance path")
    gen.set_defaults(func=_cmd_gen)

    solve = sub.add_parser("solve", help="solve an instance")
    solve.add_argument("--algo", choices=ALGORITHMS, required=True)
    solve.add_argument("--input", required=True, help="instance path")
    solve.add_argument("--output", required=True, help="solution path")
    solve.add_argument("--dot", help="optional DOT export of the arborescence")
    solve.set_defaults(func=_cmd_solve)

    ver = sub.add_parser("verify", help="re-validate a solution against its instance")
    ver.add_argument("--instance", required=True)
    ver.add_argument("--solution", required=True)
    ver.set_defaults(func=_cmd_verify)

    bench = sub.add_parser("bench", help="run a directory of instances, write CSV")
    bench.add_argument("--input-dir", required=True)
    bench.add_argument("--algos", default="maxleaves", help="comma-separated algorithms")
    bench.add_argument("--csv", required=True, help="output CSV path")
    bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except TooLarge as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
