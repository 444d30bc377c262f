"""Exact knapsack solvers: brute force, maximal-subset enumeration, distinct-sums DP.

Each solver maximizes c.x subject to a.x <= b over 0-1 vectors and reports
feasibility of the bound d as optimum >= d.  Instances whose coefficients fit
int64 run on the kernels in _kernels (numba or numpy, FWKNAP_BACKEND);
anything larger takes the exact big-integer path automatically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import _kernels
from .core import GuardError, KnapsackInstance, Solution, validate_instance
from .gadgets import enum_guard

DEFAULT_STATE_BUDGET = 2_000_000


def _checked(inst: KnapsackInstance) -> None:
    errors = validate_instance(inst)
    if errors:
        raise ValueError("invalid instance: " + "; ".join(errors))


def _accel_backend(inst: KnapsackInstance) -> Optional[str]:
    which = _kernels.backend()
    if which == "python":
        return None
    if not _kernels.fits_int64(inst.weights, inst.values, inst.capacity, inst.bound):
        return None
    return which


def brute_force_knapsack(inst: KnapsackInstance, guard: Optional[int] = None) -> Solution:
    """Exact optimum by subset enumeration; witness is lexicographically smallest.

    The big-integer path is a depth-first scan in lexicographic order of
    (x_1, ..., x_n) with two sound prunes: partial weight already over
    capacity, and remaining value too small to strictly beat the incumbent.
    """
    _checked(inst)
    limit = enum_guard() if guard is None else guard
    n = inst.n
    if n > limit:
        raise GuardError(f"brute_force_knapsack: n={n} exceeds enumeration guard {limit}")
    if n == 0:
        return Solution(inst.bound <= 0, 0, ())

    which = _accel_backend(inst)
    if which is not None:
        optimum, witness = _kernels.brute_force_int64(
            inst.weights, inst.values, inst.capacity, which
        )
    else:
        optimum, witness = _brute_force_bigint(inst)
    return Solution(optimum >= inst.bound, optimum, witness)


def _brute_force_bigint(inst: KnapsackInstance) -> tuple[int, tuple[int, ...]]:
    n = inst.n
    weights, values, capacity = inst.weights, inst.values, inst.capacity
    suffix = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        suffix[j] = suffix[j + 1] + values[j]

    best_value = -1
    best: list[int] = []
    chosen = [0] * n

    def walk(j: int, weight: int, value: int) -> None:
        nonlocal best_value, best
        if value + suffix[j] <= best_value:
            return
        if j == n:
            best_value = value
            best = chosen.copy()
            return
        chosen[j] = 0
        walk(j + 1, weight, value)
        if weight + weights[j] <= capacity:
            chosen[j] = 1
            walk(j + 1, weight + weights[j], value + values[j])
            chosen[j] = 0

    walk(0, 0, 0)
    return best_value, tuple(best)


@dataclass(frozen=True)
class MaximalSubsetList:
    """All inclusion-maximal feasible item sets, 1-based indices, lexicographic order."""

    subsets: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.subsets)


def maximal_feasible_subsets(
    weights, capacity: int, guard: Optional[int] = None
) -> MaximalSubsetList:
    """Enumerate the power set and keep the feasible sets maximal under inclusion.

    This is the preprocessing half of the maximal-subset method: the list
    depends only on the weight structure and may be reused across value vectors.
    """
    limit = enum_guard() if guard is None else guard
    n = len(weights)
    if n > limit:
        raise GuardError(f"maximal_feasible_subsets: n={n} exceeds guard {limit}")
    maximal = []
    for mask in range(1 << n):
        total = sum(weights[j] for j in range(n) if mask >> j & 1)
        if total > capacity:
            continue
        if any(
            not (mask >> j & 1) and total + weights[j] <= capacity for j in range(n)
        ):
            continue
        maximal.append(tuple(j + 1 for j in range(n) if mask >> j & 1))
    return MaximalSubsetList(tuple(sorted(maximal)))


def solve_via_maximal(
    inst: KnapsackInstance,
    precomputed: Optional[MaximalSubsetList] = None,
    guard: Optional[int] = None,
) -> Solution:
    """Optimum over maximal feasible subsets; valid only for nonnegative values.

    With c >= 0 every feasible set is dominated by a maximal superset, so
    scanning the precomputed list suffices.  Negative values are refused.
    """
    _checked(inst)
    if any(c < 0 for c in inst.values):
        raise ValueError("solve_via_maximal requires nonnegative values")
    subsets = precomputed or maximal_feasible_subsets(inst.weights, inst.capacity, guard)
    best_value = -1
    best_vec: Optional[tuple[int, ...]] = None
    for subset in subsets.subsets:
        value = sum(inst.values[j - 1] for j in subset)
        vec = tuple(1 if j + 1 in set(subset) else 0 for j in range(inst.n))
        if value > best_value or (value == best_value and vec < best_vec):
            best_value, best_vec = value, vec
    if best_vec is None:  # only when n = 0
        best_value, best_vec = 0, ()
    return Solution(best_value >= inst.bound, best_value, best_vec)


def dp_solve(
    inst: KnapsackInstance, state_budget: int = DEFAULT_STATE_BUDGET
) -> Solution:
    """Dynamic programming over the distinct attainable weight sums.

    Level j holds every distinct sum of a subset of the first j weights that
    is still within capacity; the backward value function decides item j+1
    at state (j, sum).  Aborts with GuardError past the state budget.
    """
    _checked(inst)
    if inst.n == 0:
        return Solution(inst.bound <= 0, 0, ())
    which = _accel_backend(inst)
    try:
        if which is not None:
            optimum, witness = _kernels.dp_int64(
                inst.weights, inst.values, inst.capacity, state_budget, which
            )
        else:
            optimum, witness = _dp_bigint(inst, state_budget)
    except MemoryError as exc:
        raise GuardError(f"dp_solve: {exc}") from exc
    return Solution(optimum >= inst.bound, optimum, witness)


def _dp_bigint(inst: KnapsackInstance, state_budget: int) -> tuple[int, tuple[int, ...]]:
    n, capacity = inst.n, inst.capacity
    levels: list[list[int]] = [[0]]
    total = 1
    for a in inst.weights:
        prev = levels[-1]
        merged = sorted(set(prev) | {s + a for s in prev if s + a <= capacity})
        total += len(merged)
        if total > state_budget:
            raise MemoryError("distinct-sums state budget exceeded")
        levels.append(merged)

    value_at = {s: 0 for s in levels[n]}
    take: list[dict[int, bool]] = [dict() for _ in range(n)]
    for j in range(n - 1, -1, -1):
        a, c = inst.weights[j], inst.values[j]
        cur = {}
        for s in levels[j]:
            best = value_at[s]
            chosen = False
            if s + a <= capacity:
                cand = c + value_at[s + a]
                if cand > best:
                    best, chosen = cand, True
            cur[s] = best
            take[j][s] = chosen
        value_at = cur

    optimum = value_at[0]
    witness = []
    s = 0
    for j in range(n):
        bit = take[j][s]
        witness.append(1 if bit else 0)
        if bit:
            s += inst.weights[j]
    return optimum, tuple(witness)


def feasibility(inst: KnapsackInstance, method: str = "brute", **kwargs) -> bool:
    """True iff the optimum reaches the bound d."""
    solver = {
        "brute": brute_force_knapsack,
        "dp": dp_solve,
        "maximal": solve_via_maximal,
    }.get(method)
    if solver is None:
        raise ValueError(f"unknown method {method!r}")
    return solver(inst, **kwargs).feasible
