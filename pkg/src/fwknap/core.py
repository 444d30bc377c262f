"""Shared vocabulary: literals, clauses, CNF formulas, assignments, knapsack instances.

All integer quantities are plain Python ints, which are arbitrary precision;
reduction coefficients routinely exceed machine words and must never be
truncated.  Every type here is immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional


class GuardError(RuntimeError):
    """An enumeration or memory guard refused to run an oversized input."""


@dataclass(frozen=True, order=True)
class Literal:
    """A propositional literal: variable index (1-based) plus polarity."""

    index: int
    positive: bool = True

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"literal index must be >= 1, got {self.index}")

    def negate(self) -> "Literal":
        return Literal(self.index, not self.positive)

    def value(self, assignment: tuple[int, ...]) -> int:
        v = assignment[self.index - 1]
        return v if self.positive else 1 - v

    def __str__(self) -> str:
        return f"x{self.index}" if self.positive else f"~x{self.index}"


def negate(lit: Literal) -> Literal:
    return lit.negate()


@dataclass(frozen=True)
class Clause:
    """A clause of 1..3 distinct literals.

    Duplicate literals in the input are dropped, keeping first-occurrence
    order (set semantics; the surviving order matters for gadget slots).
    A clause may contain a variable in both polarities.
    """

    literals: tuple[Literal, ...]

    def __init__(self, literals: Iterable[Literal]):
        seen: list[Literal] = []
        for lit in literals:
            if lit not in seen:
                seen.append(lit)
        if not seen:
            raise ValueError("empty clause")
        if len(seen) > 3:
            raise ValueError(f"clause has {len(seen)} distinct literals, max is 3")
        object.__setattr__(self, "literals", tuple(seen))

    def __len__(self) -> int:
        return len(self.literals)

    def __iter__(self):
        return iter(self.literals)

    def max_index(self) -> int:
        return max(lit.index for lit in self.literals)

    def __str__(self) -> str:
        return "(" + " | ".join(str(lit) for lit in self.literals) + ")"


@dataclass(frozen=True)
class CnfFormula:
    """A CNF formula with at most three literals per clause over variables 1..k."""

    k: int
    clauses: tuple[Clause, ...]

    def __init__(self, k: int, clauses: Iterable[Clause]):
        clauses = tuple(clauses)
        if k < 0:
            raise ValueError("variable count must be >= 0")
        for c in clauses:
            if c.max_index() > k:
                raise ValueError(f"clause {c} uses a variable index above k={k}")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "clauses", clauses)

    @property
    def m(self) -> int:
        return len(self.clauses)

    def __str__(self) -> str:
        return " & ".join(str(c) for c in self.clauses) or "(true)"


# An assignment is a tuple of 0/1 values for variables 1..k, in index order.
Assignment = tuple


def eval_clause(clause: Clause, assignment: tuple[int, ...], mode: str) -> bool:
    """Evaluate one clause under `mode` 'at_least_one' or 'exactly_one'."""
    if clause.max_index() > len(assignment):
        raise ValueError("assignment too short for clause")
    true_count = sum(lit.value(assignment) for lit in clause)
    if mode == "at_least_one":
        return true_count >= 1
    if mode == "exactly_one":
        return true_count == 1
    raise ValueError(f"unknown mode {mode!r}")


def eval_formula(f: CnfFormula, assignment: tuple[int, ...], mode: str) -> bool:
    if len(assignment) != f.k:
        raise ValueError(f"assignment length {len(assignment)} != k={f.k}")
    return all(eval_clause(c, assignment, mode) for c in f.clauses)


@dataclass(frozen=True)
class KnapsackInstance:
    """0-1 knapsack data: weights a, capacity b, values c, bound d.

    Feasibility asks for x in {0,1}^n with a.x <= b and c.x >= d.
    """

    weights: tuple[int, ...]
    capacity: int
    values: tuple[int, ...]
    bound: int

    @property
    def n(self) -> int:
        return len(self.weights)

    def weight_of(self, x: tuple[int, ...]) -> int:
        return sum(a for a, xi in zip(self.weights, x) if xi)

    def value_of(self, x: tuple[int, ...]) -> int:
        return sum(c for c, xi in zip(self.values, x) if xi)


def validate_instance(inst: KnapsackInstance) -> list[str]:
    """Collect structural problems; empty list means the instance is well formed."""
    errors = []
    if len(inst.values) != len(inst.weights):
        errors.append(
            f"values length {len(inst.values)} != weights length {len(inst.weights)}"
        )
    for name, vec in (("weights", inst.weights), ("values", inst.values)):
        if any(v < 0 for v in vec):
            errors.append(f"negative entry in {name}")
    if inst.capacity < 0:
        errors.append("negative capacity")
    if inst.bound < 0:
        errors.append("negative bound")
    return errors


@dataclass(frozen=True)
class Solution:
    """Outcome of a solver run on a knapsack instance."""

    feasible: bool
    optimum: Optional[int] = None
    witness: Optional[tuple[int, ...]] = None
