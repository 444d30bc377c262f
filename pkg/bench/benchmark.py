#!/usr/bin/env python3
"""Compare solver kernel backends (numba vs numpy vs pure python).

Times exhaustive search and the distinct-sums dynamic program on random
int64-range instances under each FWKNAP_BACKEND setting.  The numba timing
excludes a warm-up call so JIT compilation is not charged to the kernel.

Usage: python3 bench/benchmark.py [--n 22] [--repeats 5] [--seed 0]
"""

import argparse
import os
import random
import statistics
import time

from fwknap import KnapsackInstance, brute_force_knapsack, dp_solve
from fwknap import _kernels


def make_instance(rng, n):
    weights = tuple(rng.randint(1, 10**6) for _ in range(n))
    values = tuple(rng.randint(0, 10**6) for _ in range(n))
    capacity = sum(weights) // 2
    return KnapsackInstance(weights, capacity, values, 0)


def time_solver(solver, instances, repeats, **kwargs):
    best = []
    for inst in instances:
        samples = []
        for _ in range(repeats):
            t0 = time.perf_counter()
            solver(inst, **kwargs)
            samples.append(time.perf_counter() - t0)
        best.append(min(samples))
    return statistics.mean(best)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=22, help="items per instance")
    ap.add_argument("--instances", type=int, default=3)
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    instances = [make_instance(rng, args.n) for _ in range(args.instances)]
    backends = ["numpy", "python"]
    if _kernels.HAS_NUMBA:
        backends.insert(0, "numba")
    else:
        print("numba not installed; benchmarking numpy and python only")

    results = {}
    for backend in backends:
        os.environ["FWKNAP_BACKEND"] = backend
        # warm-up: trigger JIT compilation and any lazy imports
        brute_force_knapsack(instances[0], guard=args.n)
        dp_solve(instances[0])
        results[backend] = (
            time_solver(brute_force_knapsack, instances, args.repeats, guard=args.n),
            time_solver(dp_solve, instances, args.repeats),
        )

    print(f"n={args.n}, {args.instances} instances, best of {args.repeats} runs")
    print(f"{'backend':<8} {'brute (s)':>12} {'dp (s)':>12}")
    for backend, (bf, dp) in results.items():
        print(f"{backend:<8} {bf:>12.4f} {dp:>12.4f}")
    if "numba" in results and "numpy" in results:
        bf_speedup = results["numpy"][0] / results["numba"][0]
        dp_speedup = results["numpy"][1] / results["numba"][1]
        print(f"numba speedup over numpy: brute {bf_speedup:.1f}x, dp {dp_speedup:.1f}x")


if __name__ == "__main__":
    main()
