"""Accelerated inner loops for the exact solvers.

Two backends share one contract:

* numba: @njit kernels over int64 arrays (default when numba imports).
* numpy: chunked vectorized equivalents, selected with FWKNAP_BACKEND=numpy
  or used automatically when numba is unavailable.

Both apply only when every coefficient and every partial sum fits in int64;
the callers fall back to the pure-Python big-integer path otherwise (or when
FWKNAP_BACKEND=python).  Bit convention for brute force: item j occupies bit
n - j of the mask, so increasing mask order is lexicographic order of the
0-1 vector (x_1, ..., x_n).
"""

from __future__ import annotations

import os

import numpy as np

INT64_SAFE = 2**62

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda fn: fn


def backend() -> str:
    """Resolve the accelerated backend: 'numba' or 'numpy' ('python' forces neither)."""
    choice = os.environ.get("FWKNAP_BACKEND", "auto").lower()
    if choice in ("numba", "numpy", "python"):
        if choice == "numba" and not HAS_NUMBA:
            raise RuntimeError("FWKNAP_BACKEND=numba but numba is not importable")
        return choice
    return "numba" if HAS_NUMBA else "numpy"


def fits_int64(weights, values, capacity: int, bound: int) -> bool:
    """True when all sums the kernels form stay below 2**62."""
    return (
        sum(weights) < INT64_SAFE
        and sum(values) < INT64_SAFE
        and 0 <= capacity < INT64_SAFE
        and 0 <= bound < INT64_SAFE
    )


# ---------------------------------------------------------------- brute force

@njit(cache=True)
def _bf_numba(weights, values, capacity):
    n = weights.shape[0]
    best_value = np.int64(-1)
    best_mask = np.int64(0)
    for mask in range(np.int64(1) << n):
        w = np.int64(0)
        v = np.int64(0)
        for j in range(n):
            if (mask >> (n - 1 - j)) & 1:
                w += weights[j]
                v += values[j]
        if w <= capacity and v > best_value:
            best_value = v
            best_mask = mask
    return best_value, best_mask


def _bf_numpy(weights, values, capacity, chunk=1 << 16):
    n = weights.shape[0]
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    best_value, best_mask = np.int64(-1), np.int64(0)
    for start in range(0, 1 << n, chunk):
        masks = np.arange(start, min(start + chunk, 1 << n), dtype=np.int64)
        bits = (masks[:, None] >> shifts[None, :]) & 1
        w = bits @ weights
        v = bits @ values
        v = np.where(w <= capacity, v, np.int64(-1))
        i = int(np.argmax(v))  # first maximum = lexicographically smallest
        if v[i] > best_value:
            best_value, best_mask = v[i], masks[i]
    return int(best_value), int(best_mask)


def brute_force_int64(weights, values, capacity: int, which: str):
    """(optimum, lex-smallest optimal 0-1 vector) over all 2**n subsets."""
    w = np.asarray(weights, dtype=np.int64)
    v = np.asarray(values, dtype=np.int64)
    cap = np.int64(capacity)
    if which == "numba":
        best_value, best_mask = _bf_numba(w, v, cap)
    else:
        best_value, best_mask = _bf_numpy(w, v, cap)
    n = len(weights)
    witness = tuple((int(best_mask) >> (n - 1 - j)) & 1 for j in range(n))
    return int(best_value), witness


# -------------------------------------------------- distinct-sums DP backward

def build_levels_int64(weights, capacity: int, state_budget: int):
    """Per-item sorted arrays of distinct attainable weight sums <= capacity.

    Returns (levels, total_states) or raises MemoryError past the budget.
    """
    w = np.asarray(weights, dtype=np.int64)
    levels = [np.zeros(1, dtype=np.int64)]
    total = 1
    for a in w:
        merged = np.union1d(levels[-1], levels[-1] + a)
        merged = merged[merged <= capacity]
        total += merged.shape[0]
        if total > state_budget:
            raise MemoryError("distinct-sums state budget exceeded")
        levels.append(merged)
    return levels, total


@njit(cache=True)
def _dp_backward_numba(flat, offsets, weights, values, capacity):
    n = weights.shape[0]
    nxt = np.zeros(offsets[n + 1] - offsets[n], dtype=np.int64)
    take = np.zeros(offsets[n + 1], dtype=np.uint8)
    for j in range(n - 1, -1, -1):
        lvl = flat[offsets[j]:offsets[j + 1]]
        nxt_lvl = flat[offsets[j + 1]:offsets[j + 2]]
        cur = np.empty(lvl.shape[0], dtype=np.int64)
        for t in range(lvl.shape[0]):
            s = lvl[t]
            skip = nxt[np.searchsorted(nxt_lvl, s)]
            best = skip
            chosen = False
            s_take = s + weights[j]
            if s_take <= capacity:
                cand = values[j] + nxt[np.searchsorted(nxt_lvl, s_take)]
                if cand > best:
                    best = cand
                    chosen = True
            cur[t] = best
            take[offsets[j] + t] = 1 if chosen else 0
        nxt = cur
    return nxt[0], take


def _dp_backward_numpy(flat, offsets, weights, values, capacity):
    n = weights.shape[0]
    nxt = np.zeros(offsets[n + 1] - offsets[n], dtype=np.int64)
    take = np.zeros(offsets[n + 1], dtype=np.uint8)
    for j in range(n - 1, -1, -1):
        lvl = flat[offsets[j]:offsets[j + 1]]
        nxt_lvl = flat[offsets[j + 1]:offsets[j + 2]]
        skip = nxt[np.searchsorted(nxt_lvl, lvl)]
        s_take = lvl + weights[j]
        ok = s_take <= capacity
        cand = np.full(lvl.shape[0], np.int64(-1))
        if ok.any():
            cand[ok] = values[j] + nxt[np.searchsorted(nxt_lvl, s_take[ok])]
        chosen = cand > skip
        take[offsets[j]:offsets[j + 1]] = chosen
        nxt = np.where(chosen, cand, skip)
    return int(nxt[0]), take


def dp_int64(weights, values, capacity: int, state_budget: int, which: str):
    """Distinct-sums DP over int64 data: (optimum, witness tuple)."""
    w = np.asarray(weights, dtype=np.int64)
    v = np.asarray(values, dtype=np.int64)
    levels, _ = build_levels_int64(weights, capacity, state_budget)
    offsets = np.zeros(len(levels) + 1, dtype=np.int64)
    for j, lvl in enumerate(levels):
        offsets[j + 1] = offsets[j] + lvl.shape[0]
    flat = np.concatenate(levels)
    if which == "numba":
        optimum, take = _dp_backward_numba(flat, offsets, w, v, np.int64(capacity))
    else:
        optimum, take = _dp_backward_numpy(flat, offsets, w, v, capacity)
    # Walk the decision bits forward from (level 0, sum 0).
    witness = []
    s = 0
    for j in range(len(weights)):
        lvl = levels[j]
        t = int(np.searchsorted(lvl, s))
        bit = int(take[int(offsets[j]) + t])
        witness.append(bit)
        if bit:
            s += int(w[j])
    return int(optimum), tuple(witness)
