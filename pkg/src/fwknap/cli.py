"""Command-line front end.

Exit codes: 10 satisfiable/feasible, 20 unsatisfiable/infeasible (SAT-solver
convention), 0 informational success, 1 usage/format error, 2 resource guard.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .core import GuardError
from .formats import FormatError, parse_dimacs, read_instance, write_dimacs, write_instance
from .gadgets import gadget_transform, pad_to_three
from .reduction import build_layout, decode_digits, reduce_formula
from .solvers import brute_force_knapsack, dp_solve, solve_via_maximal
from .verify import run_suite, summarize

EXIT_SAT = 10
EXIT_UNSAT = 20
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_GUARD = 2


def _read(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_transform(args) -> int:
    formula = parse_dimacs(_read(args.input))
    transformed, traces = gadget_transform(pad_to_three(formula))
    header = "".join(
        f"c gadget clause {t.source_clause_index} fresh {' '.join(map(str, t.fresh_variables))}\n"
        for t in traces
    )
    _write(args.output, header + write_dimacs(transformed))
    return EXIT_OK


def cmd_reduce(args) -> int:
    formula = parse_dimacs(_read(args.input))
    if args.square and formula.k != formula.m:
        raise FormatError(
            f"--square requires k = m, got k={formula.k} m={formula.m}"
        )
    inst, layout = reduce_formula(formula)
    meta = {"k": layout.k, "m": layout.m, "beta": layout.beta}
    _write(args.output, write_instance(inst, meta))
    return EXIT_OK


def cmd_solve(args) -> int:
    inst, _ = read_instance(_read(args.input))
    solver = {"brute": brute_force_knapsack, "dp": dp_solve, "maximal": solve_via_maximal}[
        args.method
    ]
    solution = solver(inst)
    print("s " + ("FEASIBLE" if solution.feasible else "INFEASIBLE"))
    if solution.optimum is not None:
        print(f"o {solution.optimum}")
    if solution.witness is not None:
        lits = " ".join(
            str(j + 1) if x else str(-(j + 1)) for j, x in enumerate(solution.witness)
        )
        print(f"v {lits} 0".replace("  ", " "))
    return EXIT_SAT if solution.feasible else EXIT_UNSAT


def cmd_verify(args) -> int:
    reports = run_suite(args.max_k, args.max_m, args.seed, args.systems)
    refuted = [r for r in reports if not r.confirmed]
    for r in reports:
        print(r.line())
    print(summarize(reports))
    if refuted and args.sidecar:
        with open(args.sidecar, "w") as fh:
            for r in refuted:
                fh.write(f"{r.check} {r.descriptor} {r.counterexample!r}\n")
        print(f"counterexamples written to {args.sidecar}", file=sys.stderr)
    return EXIT_USAGE if refuted else EXIT_OK


def _position_table(k: int, m: int):
    layout = build_layout(k, m)
    table = {}
    for tag, pos in layout.inequality_positions.items():
        table[pos] = tag
    for tag, pos in layout.equality_positions.items():
        table[layout.shift + pos] = tag
    return layout, table


def _tag_str(tag) -> str:
    return tag[0] + "(" + ",".join(str(t) for t in tag[1:]) + ")"


def cmd_layout(args) -> int:
    layout, table = _position_table(args.k, args.m)
    print(f"k {layout.k}")
    print(f"m {layout.m}")
    print(f"beta {layout.beta}")
    print(f"shift {layout.shift}")
    print(f"positions {layout.total_span}")
    for pos in sorted(table):
        print(f"position {pos} {_tag_str(table[pos])}")
    return EXIT_OK


def cmd_decode(args) -> int:
    layout, table = _position_table(args.k, args.m)
    digits = decode_digits(args.value, layout.beta, layout.total_span)
    print(f"beta {layout.beta}")
    for pos, digit in enumerate(digits):
        print(f"digit {pos} {digit} {_tag_str(table[pos])}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fwknap",
        description="Reduction compiler and exact solvers for fixed-weights knapsack",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="3-SAT DIMACS -> 1-in-3-SAT DIMACS")
    p.add_argument("input", nargs="?", help="DIMACS file (default stdin)")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("reduce", help="1-in-3 DIMACS -> knapsack instance file")
    p.add_argument("input", nargs="?")
    p.add_argument("-o", "--output")
    p.add_argument("--square", action="store_true", help="reject formulas with k != m")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("solve", help="solve an instance file exactly")
    p.add_argument("input", nargs="?")
    p.add_argument("--method", choices=("brute", "dp", "maximal"), default="dp")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="run the oracle cross-check suite")
    p.add_argument("--max-k", type=int, default=2)
    p.add_argument("--max-m", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--systems", type=int, default=100,
                   help="random aggregation systems to check")
    p.add_argument("--sidecar", default="counterexamples.txt",
                   help="file for counterexamples on refutation")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("layout", help="print the digit-position map for (k, m)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_layout)

    p = sub.add_parser("decode", help="base-beta digit dump of a coefficient")
    p.add_argument("--value", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_decode)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (FormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
