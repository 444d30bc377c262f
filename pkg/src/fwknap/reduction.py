"""Compile a 1-in-3-SAT formula into a knapsack instance with formula-independent weights.

Pipeline:

1. `build_model` writes the explicit 0-1 system: unique-choice equalities
   (variable pairs, per-clause choice, slack rows) and inequality rows
   (per-clause satisfaction, conversion rows), including the redundant
   all-zero conversion rows that pin down digit positions.
2. `build_layout` assigns each constraint family a digit position in base
   beta, with the inequality block in the low (2k+1)m positions and the
   equality block lifted above it.
3. `aggregate_equalities` collapses the equality system into a single
   big-integer equation; `fixed_weights` does this for the four
   formula-independent families, so the weight vector and capacity depend
   only on (k, m).
4. `value_side` aggregates the clause inequalities and packs them together
   with the >= half of the equality system into the value vector and bound.

Model variables, in flat order (n = 2k + 4km):
    x_j (j=1..k), xbar_j, x_ij (row-major in i then j), xbar_ij, s_ij, sbar_ij
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import Clause, CnfFormula, Literal, KnapsackInstance, eval_formula

# Constraint-family tags.  A tag plus its indices identifies one row and,
# through the layout, one digit position.
VAR_PAIR = "VarPair"          # x_j + xbar_j = 1
CLAUSE_CHOICE = "ClauseChoice"  # sum_j x_ij + sum_j xbar_ij = 1
SLACK_POS = "SlackPos"        # x_ij + s_ij + xbar_j = 1
SLACK_NEG = "SlackNeg"        # xbar_ij + sbar_ij + x_j = 1
CLAUSE_SAT = "ClauseSat"      # sum over literals of C_i >= 1
CONV_POS = "ConvPos"          # (x_ij + xbar_j) delta >= delta
CONV_NEG = "ConvNeg"          # (xbar_ij + x_j) delta >= delta


@dataclass(frozen=True)
class VariableLayout:
    """Bijection between model variables and flat 0-based indices."""

    k: int
    m: int

    @property
    def n(self) -> int:
        return 2 * self.k + 4 * self.k * self.m

    def _block(self, i: int, j: int) -> int:
        return self.k * (i - 1) + (j - 1)

    def x(self, j: int) -> int:
        return j - 1

    def xbar(self, j: int) -> int:
        return self.k + (j - 1)

    def xij(self, i: int, j: int) -> int:
        return 2 * self.k + self._block(i, j)

    def xbarij(self, i: int, j: int) -> int:
        return 2 * self.k + self.k * self.m + self._block(i, j)

    def sij(self, i: int, j: int) -> int:
        return 2 * self.k + 2 * self.k * self.m + self._block(i, j)

    def sbarij(self, i: int, j: int) -> int:
        return 2 * self.k + 3 * self.k * self.m + self._block(i, j)

    def name(self, flat: int) -> str:
        k, km = self.k, self.k * self.m
        if flat < k:
            return f"x{flat + 1}"
        if flat < 2 * k:
            return f"xbar{flat - k + 1}"
        rel = flat - 2 * k
        kind = ("x", "xbar", "s", "sbar")[rel // km]
        rel %= km
        return f"{kind}_{rel // k + 1},{rel % k + 1}"


@dataclass(frozen=True)
class LinearConstraint:
    """One row of the model: 0/1 coefficients over flat variable indices."""

    terms: tuple[tuple[int, int], ...]  # (flat_index, coefficient), coefficient = 1
    relation: str                       # "eq" or "geq"
    rhs: int
    tag: tuple

    def evaluate(self, x) -> int:
        return sum(coeff * x[idx] for idx, coeff in self.terms)

    def holds(self, x) -> bool:
        lhs = self.evaluate(x)
        return lhs == self.rhs if self.relation == "eq" else lhs >= self.rhs


@dataclass(frozen=True)
class ModelSystem:
    k: int
    m: int
    equalities: tuple[LinearConstraint, ...]
    inequalities: tuple[LinearConstraint, ...]

    def holds(self, x) -> bool:
        return all(c.holds(x) for c in self.equalities) and all(
            c.holds(x) for c in self.inequalities
        )


def delta(f: CnfFormula, i: int, lit: Literal) -> int:
    """1 if the literal occurs in clause i (1-based), else 0."""
    return 1 if lit in f.clauses[i - 1].literals else 0


def build_model(f: CnfFormula) -> ModelSystem:
    """The explicit unique-choice system for a 1-in-3 formula.

    Redundant conversion rows (literal absent from the clause) are kept as
    all-zero rows so that every (i, j) slot owns a digit position.
    """
    k, m = f.k, f.m
    var = VariableLayout(k, m)
    eqs: list[LinearConstraint] = []
    ineqs: list[LinearConstraint] = []

    for j in range(1, k + 1):
        eqs.append(LinearConstraint(((var.x(j), 1), (var.xbar(j), 1)), "eq", 1, (VAR_PAIR, j)))
    for i in range(1, m + 1):
        terms = tuple((var.xij(i, j), 1) for j in range(1, k + 1)) + tuple(
            (var.xbarij(i, j), 1) for j in range(1, k + 1)
        )
        eqs.append(LinearConstraint(terms, "eq", 1, (CLAUSE_CHOICE, i)))
    for i in range(1, m + 1):
        for j in range(1, k + 1):
            eqs.append(
                LinearConstraint(
                    ((var.xij(i, j), 1), (var.sij(i, j), 1), (var.xbar(j), 1)),
                    "eq", 1, (SLACK_POS, i, j),
                )
            )
    for i in range(1, m + 1):
        for j in range(1, k + 1):
            eqs.append(
                LinearConstraint(
                    ((var.xbarij(i, j), 1), (var.sbarij(i, j), 1), (var.x(j), 1)),
                    "eq", 1, (SLACK_NEG, i, j),
                )
            )

    for i in range(1, m + 1):
        terms = []
        for j in range(1, k + 1):
            if delta(f, i, Literal(j, True)):
                terms.append((var.xij(i, j), 1))
            if delta(f, i, Literal(j, False)):
                terms.append((var.xbarij(i, j), 1))
        ineqs.append(LinearConstraint(tuple(terms), "geq", 1, (CLAUSE_SAT, i)))
    for i in range(1, m + 1):
        for j in range(1, k + 1):
            d = delta(f, i, Literal(j, True))
            terms = ((var.xij(i, j), 1), (var.xbar(j), 1)) if d else ()
            ineqs.append(LinearConstraint(terms, "geq", d, (CONV_POS, i, j)))
    for i in range(1, m + 1):
        for j in range(1, k + 1):
            d = delta(f, i, Literal(j, False))
            terms = ((var.xbarij(i, j), 1), (var.x(j), 1)) if d else ()
            ineqs.append(LinearConstraint(terms, "geq", d, (CONV_NEG, i, j)))

    return ModelSystem(k, m, tuple(eqs), tuple(ineqs))


@dataclass(frozen=True)
class ReductionLayout:
    """Digit positions per constraint family, and the base beta.

    Inequality block occupies positions 0 .. (2k+1)m - 1 of the value side;
    the equality block (positions re-based to 0) is lifted above it by
    beta**shift, shift = (2k+1)m.  beta = 2km + 2 (2k + 2 when m = 0),
    which exceeds both the widest equality row (2k nonzeros) and the
    digit-sum bound 2km used in the carry-freeness argument.
    """

    k: int
    m: int
    beta: int
    shift: int
    inequality_positions: dict = field(repr=False)
    equality_positions: dict = field(repr=False)

    @property
    def inequality_span(self) -> int:
        return (2 * self.k + 1) * self.m

    @property
    def equality_span(self) -> int:
        return 2 * self.k * self.m + self.m + self.k

    @property
    def total_span(self) -> int:
        return self.inequality_span + self.equality_span


def build_layout(k: int, m: int) -> ReductionLayout:
    if k < 1 or m < 0:
        raise ValueError("need k >= 1 and m >= 0")
    km = k * m
    beta = 2 * km + 2 if m >= 1 else 2 * k + 2
    ineq_pos: dict = {}
    eq_pos: dict = {}
    for i in range(1, m + 1):
        ineq_pos[(CLAUSE_SAT, i)] = i - 1
        eq_pos[(CLAUSE_CHOICE, i)] = 2 * km + (i - 1)
    for i in range(1, m + 1):
        for j in range(1, k + 1):
            block = k * (i - 1) + (j - 1)
            ineq_pos[(CONV_POS, i, j)] = m + block
            ineq_pos[(CONV_NEG, i, j)] = m + km + block
            eq_pos[(SLACK_POS, i, j)] = block
            eq_pos[(SLACK_NEG, i, j)] = km + block
    for j in range(1, k + 1):
        eq_pos[(VAR_PAIR, j)] = 2 * km + m + (j - 1)
    return ReductionLayout(k, m, beta, (2 * k + 1) * m, ineq_pos, eq_pos)


@dataclass(frozen=True)
class AggregateForm:
    """A single big-integer equation equivalent to a unique-choice system."""

    coefficients: tuple[int, ...]  # indexed by flat variable index
    rhs: int


def aggregate_equalities(
    eqs, beta: int, positions: dict, n: int
) -> AggregateForm:
    """Collapse unique-choice equalities into one equation in base beta.

    Each equality contributes beta**position to the coefficient of every
    variable it contains and to the right-hand side.  Requires beta to
    exceed the widest row, which is what keeps digits carry-free.
    """
    widest = max((len(c.terms) for c in eqs), default=0)
    if beta <= widest:
        raise ValueError(f"beta={beta} must exceed max row width {widest}")
    coeffs = [0] * n
    rhs = 0
    for c in eqs:
        if c.relation != "eq" or c.rhs != 1:
            raise ValueError(f"not a unique-choice equality: {c.tag}")
        p = beta ** positions[c.tag]
        for idx, coeff in c.terms:
            coeffs[idx] += coeff * p
        rhs += p
    return AggregateForm(tuple(coeffs), rhs)


def fixed_weights(k: int, m: int) -> tuple[tuple[int, ...], int]:
    """Weight vector and capacity for dimension pair (k, m).

    Aggregates only the formula-independent equality families, so any two
    formulas with the same (k, m) share these bit-for-bit.
    """
    layout = build_layout(k, m)
    # The equality families never mention clause contents, so an empty
    # formula of the right shape generates them.
    dummy = CnfFormula(k, [Clause([Literal(1)]) for _ in range(m)])
    model = build_model(dummy)
    agg = aggregate_equalities(
        model.equalities, layout.beta, layout.equality_positions, VariableLayout(k, m).n
    )
    return agg.coefficients, agg.rhs


def clause_value_block(
    f: CnfFormula, layout: ReductionLayout
) -> tuple[tuple[int, ...], int]:
    """Aggregated clause-side coefficients c0 and threshold d0 (low digit block)."""
    k, m, beta = f.k, f.m, layout.beta
    var = VariableLayout(k, m)
    c0 = [0] * var.n
    d0 = 0
    for i in range(1, m + 1):
        p = beta ** layout.inequality_positions[(CLAUSE_SAT, i)]
        for j in range(1, k + 1):
            if delta(f, i, Literal(j, True)):
                c0[var.xij(i, j)] += p
            if delta(f, i, Literal(j, False)):
                c0[var.xbarij(i, j)] += p
        d0 += p
        for j in range(1, k + 1):
            if delta(f, i, Literal(j, True)):
                p_conv = beta ** layout.inequality_positions[(CONV_POS, i, j)]
                c0[var.xij(i, j)] += p_conv
                c0[var.xbar(j)] += p_conv
                d0 += p_conv
            if delta(f, i, Literal(j, False)):
                p_conv = beta ** layout.inequality_positions[(CONV_NEG, i, j)]
                c0[var.xbarij(i, j)] += p_conv
                c0[var.x(j)] += p_conv
                d0 += p_conv
    return tuple(c0), d0


def value_side(f: CnfFormula, layout: ReductionLayout) -> tuple[tuple[int, ...], int]:
    """Value vector c and bound d: the equality system's >= half lifted above c0."""
    if (layout.k, layout.m) != (f.k, f.m):
        raise ValueError("layout dimensions do not match formula")
    weights, capacity = fixed_weights(f.k, f.m)
    c0, d0 = clause_value_block(f, layout)
    lift = layout.beta ** layout.shift
    values = tuple(lift * a + c for a, c in zip(weights, c0))
    return values, lift * capacity + d0


def reduce_formula(f: CnfFormula) -> tuple[KnapsackInstance, ReductionLayout]:
    """Full reduction: the instance is feasible iff f is 1-in-3 satisfiable."""
    if f.k < 1:
        raise ValueError("reduction needs at least one variable")
    layout = build_layout(f.k, f.m)
    weights, capacity = fixed_weights(f.k, f.m)
    values, bound = value_side(f, layout)
    return KnapsackInstance(weights, capacity, values, bound), layout


def decode_digits(total: int, beta: int, num_positions: int) -> list[int]:
    """Base-beta expansion of `total`, least significant digit first."""
    if total < 0:
        raise ValueError("cannot decode a negative total")
    if beta < 2:
        raise ValueError("beta must be >= 2")
    digits = []
    for _ in range(num_positions):
        total, digit = divmod(total, beta)
        digits.append(digit)
    if total:
        raise ValueError(f"value does not fit in {num_positions} base-{beta} digits")
    return digits


def lift_assignment(assignment: tuple[int, ...], f: CnfFormula) -> tuple[int, ...]:
    """Expand a 1-in-3 witness to the n = 2k + 4km model variables.

    Validates the witness first, so a broken reduction fails loudly rather
    than producing a vector that happens to satisfy nothing.
    """
    if not eval_formula(f, assignment, "exactly_one"):
        raise ValueError("assignment is not a 1-in-3 witness of the formula")
    k, m = f.k, f.m
    var = VariableLayout(k, m)
    x = [0] * var.n
    for j in range(1, k + 1):
        x[var.x(j)] = assignment[j - 1]
        x[var.xbar(j)] = 1 - assignment[j - 1]
    for i in range(1, m + 1):
        for j in range(1, k + 1):
            xij = 1 if delta(f, i, Literal(j, True)) and assignment[j - 1] == 1 else 0
            xbarij = 1 if delta(f, i, Literal(j, False)) and assignment[j - 1] == 0 else 0
            x[var.xij(i, j)] = xij
            x[var.xbarij(i, j)] = xbarij
            x[var.sij(i, j)] = 1 - xij - x[var.xbar(j)]
            x[var.sbarij(i, j)] = 1 - xbarij - x[var.x(j)]
    return tuple(x)


def extract_assignment(x, k: int, m: int) -> tuple[int, ...]:
    """Read the truth assignment back off the first k coordinates."""
    if len(x) != 2 * k + 4 * k * m:
        raise ValueError(f"vector length {len(x)} != 2k + 4km = {2 * k + 4 * k * m}")
    return tuple(x[:k])
