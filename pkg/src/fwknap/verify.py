"""Cross-checks of the construction against brute-force oracles at small scale.

Each check compares two independently computed answers and emits a Report;
a refutation always carries a concrete counterexample that can be replayed
through the public operations.  `run_suite` enumerates canonical formulas
exhaustively up to a dimension cap and is the release gate at (2, 2).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterator, Optional

from .core import Clause, CnfFormula, Literal
from .gadgets import brute_force_sat, gadget_transform, pad_to_three
from .reduction import lift_assignment, reduce_formula
from .solvers import brute_force_knapsack

CONFIRMED = "confirmed"
REFUTED = "refuted"


@dataclass(frozen=True)
class Report:
    check: str
    descriptor: str
    verdict: str
    cases: int
    millis: int
    counterexample: Optional[dict] = None

    @property
    def confirmed(self) -> bool:
        return self.verdict == CONFIRMED

    def line(self) -> str:
        return f"{self.check} {self.descriptor} {self.verdict} {self.cases} {self.millis}"


def _report(check, descriptor, ok, cases, started, counterexample=None) -> Report:
    millis = int((time.perf_counter() - started) * 1000)
    return Report(
        check,
        descriptor,
        CONFIRMED if ok else REFUTED,
        cases,
        millis,
        None if ok else counterexample,
    )


def formula_descriptor(f: CnfFormula) -> str:
    clauses = ";".join(
        ",".join(str(lit.index if lit.positive else -lit.index) for lit in c)
        for c in f.clauses
    )
    return f"k{f.k}[{clauses}]"


def check_equivalence(f: CnfFormula) -> Report:
    """1-in-3 satisfiability of f versus knapsack feasibility of its reduction.

    The satisfiable direction is certified by lifting the witness; the
    unsatisfiable direction enumerates the whole instance.
    """
    started = time.perf_counter()
    descriptor = formula_descriptor(f)
    inst, _ = reduce_formula(f)
    witness = brute_force_sat(f, "exactly_one")
    cases = 2 ** f.k
    if witness is not None:
        lifted = lift_assignment(witness, f)
        ok = (
            inst.weight_of(lifted) == inst.capacity
            and inst.value_of(lifted) >= inst.bound
        )
        cases += 1
        counterexample = {
            "formula": descriptor,
            "witness": witness,
            "lifted": lifted,
            "weight": inst.weight_of(lifted),
            "capacity": inst.capacity,
            "value": inst.value_of(lifted),
            "bound": inst.bound,
        }
    else:
        solution = brute_force_knapsack(inst)
        ok = not solution.feasible
        cases += 2 ** inst.n
        counterexample = {
            "formula": descriptor,
            "knapsack_witness": solution.witness,
            "optimum": solution.optimum,
            "bound": inst.bound,
        }
    return _report("reduction-equivalence", descriptor, ok, cases, started, counterexample)


def check_gadget(f: CnfFormula) -> Report:
    """Plain satisfiability of f versus 1-in-3 satisfiability of its gadget transform."""
    started = time.perf_counter()
    descriptor = formula_descriptor(f)
    transformed, _ = gadget_transform(pad_to_three(f))
    sat = brute_force_sat(f, "at_least_one")
    one_in_three = brute_force_sat(transformed, "exactly_one")
    ok = (sat is None) == (one_in_three is None)
    cases = 2 ** f.k + 2 ** transformed.k
    return _report(
        "gadget-equivalence", descriptor, ok, cases, started,
        {"formula": descriptor, "sat": sat, "one_in_three": one_in_three},
    )


def check_aggregation(rows: list[list[int]], beta: int) -> Report:
    """Solution-set equality between a unique-choice system and its aggregate.

    `rows` are 0/1 coefficient rows, each meaning row . x = 1; row i takes
    digit position i.  Undersized beta is evaluated, not rejected, so carry
    failures surface as refutations with counterexamples.
    """
    started = time.perf_counter()
    n = len(rows[0]) if rows else 0
    coeffs = [sum(beta**i * row[j] for i, row in enumerate(rows)) for j in range(n)]
    rhs = sum(beta**i for i in range(len(rows)))
    descriptor = f"n{n}M{len(rows)}beta{beta}"
    for bits in range(1 << n):
        x = [(bits >> j) & 1 for j in range(n)]
        system_ok = all(sum(r * xi for r, xi in zip(row, x)) == 1 for row in rows)
        aggregate_ok = sum(c * xi for c, xi in zip(coeffs, x)) == rhs
        if system_ok != aggregate_ok:
            return _report(
                "aggregation", descriptor, False, bits + 1, started,
                {"rows": rows, "beta": beta, "x": x,
                 "system": system_ok, "aggregate": aggregate_ok},
            )
    return _report("aggregation", descriptor, True, 1 << n, started)


def all_clauses(k: int, exactly_three: bool = False) -> list[Clause]:
    """Canonical clause pool over variables 1..k: sorted distinct-literal combinations."""
    literals = sorted(Literal(j, pos) for j in range(1, k + 1) for pos in (True, False))
    sizes = (3,) if exactly_three else (1, 2, 3)
    pool = []
    for size in sizes:
        pool.extend(Clause(combo) for combo in combinations(literals, size))
    return pool


def enumerate_formulas(
    k: int, max_m: int, exactly_three: bool = False
) -> Iterator[CnfFormula]:
    """All canonical formulas over variables 1..k with up to max_m clauses."""
    pool = all_clauses(k, exactly_three)
    for m in range(max_m + 1):
        for clauses in combinations_with_replacement(pool, m):
            yield CnfFormula(k, clauses)


def random_unique_choice_system(
    rng: random.Random, max_n: int = 8, max_rows: int = 4, max_width: int = 3
) -> tuple[list[list[int]], int]:
    """A random 0/1 equality system plus the base beta = (widest row) + 1."""
    n = rng.randint(2, max_n)
    num_rows = rng.randint(1, max_rows)
    rows = []
    for _ in range(num_rows):
        width = rng.randint(1, min(max_width, n))
        cols = rng.sample(range(n), width)
        rows.append([1 if j in cols else 0 for j in range(n)])
    p = max(sum(row) for row in rows)
    return rows, p + 1


def run_suite(
    max_k: int, max_m: int, seed: int, systems: int = 100
) -> list[Report]:
    """Exhaustive equivalence and gadget checks up to (max_k, max_m), plus
    seeded random aggregation systems.  Deterministic for a given seed."""
    reports: list[Report] = []
    for k in range(1, max_k + 1):
        for f in enumerate_formulas(k, max_m):
            reports.append(check_gadget(f))
            reports.append(check_equivalence(f))
    rng = random.Random(seed)
    for _ in range(systems):
        rows, beta = random_unique_choice_system(rng)
        reports.append(check_aggregation(rows, beta))
    return reports


def summarize(reports: list[Report]) -> str:
    refuted = sum(1 for r in reports if not r.confirmed)
    cases = sum(r.cases for r in reports)
    return f"reports {len(reports)} refuted {refuted} cases {cases}"
