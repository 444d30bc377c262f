"""3-SAT to 1-in-3-SAT gadget transform plus brute-force SAT oracles.

A clause (x | y | z) becomes the conjunction

    (~x | a | b) & (y | b | c) & (~z | c | d)

with four fresh variables a, b, c, d per clause.  The source clause is
satisfiable in the ordinary sense iff the three emitted clauses admit an
assignment with exactly one true literal each.  The oracles here exist
for verification; they enumerate assignments and are deliberately naive.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product
from typing import Optional

from .core import Clause, CnfFormula, GuardError, Literal, eval_formula

DEFAULT_ENUM_GUARD = 30
_GUARD_ENV = "FWKNAP_MAX_ENUM"


def enum_guard(default: int = DEFAULT_ENUM_GUARD) -> int:
    raw = os.environ.get(_GUARD_ENV)
    return int(raw) if raw else default


@dataclass(frozen=True)
class PaddedFormula:
    """A formula flattened to ordered 3-literal slots, one triple per clause.

    Slots may repeat a literal: a short clause is padded by repeating its
    last literal, which leaves plain-SAT semantics unchanged.
    """

    k: int
    slots: tuple[tuple[Literal, Literal, Literal], ...]

    @property
    def m(self) -> int:
        return len(self.slots)


@dataclass(frozen=True)
class GadgetTrace:
    """Bookkeeping for one clause gadget: which fresh variables and clauses it produced."""

    source_clause_index: int          # 1-based index into the source formula
    fresh_variables: tuple[int, int, int, int]   # indices of a, b, c, d
    emitted_clause_indices: tuple[int, int, int]  # 1-based indices in the output


def pad_to_three(f: CnfFormula) -> PaddedFormula:
    """Flatten each clause to exactly three ordered literal slots."""
    slots = []
    for clause in f.clauses:
        lits = list(clause.literals)
        while len(lits) < 3:
            lits.append(lits[-1])
        slots.append(tuple(lits))
    return PaddedFormula(f.k, tuple(slots))


def gadget_transform(padded: PaddedFormula) -> tuple[CnfFormula, list[GadgetTrace]]:
    """Emit the 1-in-3 formula: 3 clauses and 4 fresh variables per source clause.

    Fresh variables for clause i (1-based) are k + 4(i-1) + 1 .. k + 4(i-1) + 4,
    so traces never collide across clauses.
    """
    k, m = padded.k, padded.m
    out_clauses: list[Clause] = []
    traces: list[GadgetTrace] = []
    for i, (x, y, z) in enumerate(padded.slots, start=1):
        base = k + 4 * (i - 1)
        a, b, c, d = (Literal(base + t) for t in (1, 2, 3, 4))
        first = len(out_clauses) + 1
        out_clauses.append(Clause([x.negate(), a, b]))
        out_clauses.append(Clause([y, b, c]))
        out_clauses.append(Clause([z.negate(), c, d]))
        traces.append(
            GadgetTrace(i, (base + 1, base + 2, base + 3, base + 4),
                        (first, first + 1, first + 2))
        )
    return CnfFormula(k + 4 * m, out_clauses), traces


def gadget_completions(x: int, y: int, z: int) -> list[tuple[int, int, int, int]]:
    """All (a,b,c,d) in {0,1}^4 solving the one-clause gadget for fixed slot values.

    The system is (1-x)+a+b = 1, y+b+c = 1, (1-z)+c+d = 1.
    """
    sols = []
    for a, b, c, d in product((0, 1), repeat=4):
        if (1 - x) + a + b == 1 and y + b + c == 1 and (1 - z) + c + d == 1:
            sols.append((a, b, c, d))
    return sols


def brute_force_sat(
    f: CnfFormula, mode: str, guard: Optional[int] = None
) -> Optional[tuple[int, ...]]:
    """Lexicographically first satisfying assignment under `mode`, or None.

    Enumeration starts at all-false; variable 1 is the most significant
    coordinate.  Refuses formulas with more variables than the guard.
    """
    limit = enum_guard() if guard is None else guard
    if f.k > limit:
        raise GuardError(f"brute_force_sat: k={f.k} exceeds enumeration guard {limit}")
    for bits in product((0, 1), repeat=f.k):
        if eval_formula(f, bits, mode):
            return bits
    return None
