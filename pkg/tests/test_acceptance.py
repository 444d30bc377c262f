"""Acceptance gate: one test per release criterion, each printing a verdict line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and timings.
"""

import random
import time

from fwknap import (
    brute_force_knapsack,
    check_aggregation,
    check_equivalence,
    check_gadget,
    dp_solve,
    fixed_weights,
    gadget_completions,
    lift_assignment,
    read_instance,
    reduce_formula,
    solve_via_maximal,
    write_instance,
)
from fwknap.reduction import clause_value_block
from fwknap.verify import enumerate_formulas

from conftest import random_formula, random_instance

GADGET_CASE_COUNTS = {
    (0, 0, 0): 0, (1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1,
    (1, 1, 0): 1, (1, 0, 1): 2, (0, 1, 1): 1, (1, 1, 1): 1,
}


def report(name, started, budget):
    elapsed = time.perf_counter() - started
    print(f"ACCEPT {name}: PASS ({elapsed:.2f}s, budget {budget})")
    assert elapsed < budget


def test_criterion_1_gadget_case_table():
    started = time.perf_counter()
    expected = {
        (0, 0, 0): [],
        (1, 0, 0): [(0, 1, 0, 0)],
        (0, 1, 0): [(0, 0, 0, 0)],
        (0, 0, 1): [(0, 0, 1, 0)],
        (1, 1, 0): [(1, 0, 0, 0)],
        (1, 0, 1): [(0, 1, 0, 1), (1, 0, 1, 0)],
        (0, 1, 1): [(0, 0, 0, 1)],
        (1, 1, 1): [(1, 0, 0, 1)],
    }
    for (x, y, z), completions in expected.items():
        found = gadget_completions(x, y, z)
        assert found == completions
        assert len(found) == GADGET_CASE_COUNTS[(x, y, z)]
    report("1 gadget case table", started, 1.0)


def test_criterion_2_gadget_equivalence_exhaustive():
    started = time.perf_counter()
    checked = 0
    for k in (1, 2, 3):
        for f in enumerate_formulas(k, 2, exactly_three=True):
            r = check_gadget(f)
            assert r.confirmed, r.counterexample
            checked += 1
    assert checked >= 200
    report(f"2 gadget equivalence ({checked} formulas)", started, 120.0)


def test_criterion_3_aggregation_random_systems():
    started = time.perf_counter()
    rng = random.Random(2024)
    for _ in range(500):
        n = rng.randint(2, 8)
        rows = []
        for _ in range(rng.randint(1, 4)):
            width = rng.randint(1, min(3, n))
            cols = rng.sample(range(n), width)
            rows.append([1 if j in cols else 0 for j in range(n)])
        beta = max(sum(row) for row in rows) + 1
        r = check_aggregation(rows, beta)
        assert r.confirmed, r.counterexample
    report("3 aggregation (500 systems)", started, 60.0)


def test_criterion_4_reduction_equivalence_exhaustive():
    started = time.perf_counter()
    checked = 0
    for k in (1, 2):
        for f in enumerate_formulas(k, 2):
            r = check_equivalence(f)
            assert r.confirmed, r.counterexample
            checked += 1
    assert checked >= 100
    report(f"4 reduction equivalence ({checked} formulas)", started, 600.0)


def test_criterion_5_fixed_structure():
    started = time.perf_counter()
    rng = random.Random(99)
    for k in range(1, 5):
        for m in range(1, 5):
            expected = fixed_weights(k, m)
            for _ in range(10):
                f1, f2 = random_formula(rng, k, m), random_formula(rng, k, m)
                i1, _ = reduce_formula(f1)
                i2, _ = reduce_formula(f2)
                assert (i1.weights, i1.capacity) == (i2.weights, i2.capacity) == expected
    report("5 fixed structure", started, 1.0)


def test_criterion_6_paper_fixture(paper_formula):
    started = time.perf_counter()
    inst, layout = reduce_formula(paper_formula)
    assert inst.n == 30
    assert layout.total_span == 31
    lifted = lift_assignment((0, 1, 0), paper_formula)
    assert inst.weight_of(lifted) == inst.capacity
    assert inst.value_of(lifted) >= inst.bound
    report("6 worked-example fixture", started, 1.0)


def test_criterion_7_solver_agreement():
    started = time.perf_counter()
    rng = random.Random(7)
    for _ in range(200):
        inst = random_instance(rng, max_n=16)
        assert dp_solve(inst).optimum == brute_force_knapsack(inst).optimum
    for _ in range(200):
        inst = random_instance(rng, max_n=12)
        assert solve_via_maximal(inst).optimum == brute_force_knapsack(inst).optimum
    report("7 solver agreement (400 instances)", started, 60.0)


def test_criterion_8_constraint_ladder_k1_m1():
    started = time.perf_counter()
    for f in enumerate_formulas(1, 1):
        if f.m != 1:
            continue
        inst, layout = reduce_formula(f)
        assert inst.n == 6
        c0, d0 = clause_value_block(f, layout)
        for bits in range(64):
            x = tuple((bits >> j) & 1 for j in range(6))
            if inst.weight_of(x) <= inst.capacity and inst.value_of(x) >= inst.bound:
                assert inst.weight_of(x) == inst.capacity
                assert sum(c * xi for c, xi in zip(c0, x)) >= d0
    report("8 weight/value constraint ladder", started, 1.0)


def test_criterion_9_serialization_roundtrip():
    started = time.perf_counter()
    rng = random.Random(11)
    for _ in range(100):
        inst = random_instance(rng, max_n=20, max_coeff=10**40)
        assert read_instance(write_instance(inst))[0] == inst
    for k in (1, 2):
        for f in enumerate_formulas(k, 2):
            inst, layout = reduce_formula(f)
            meta = {"k": layout.k, "m": layout.m, "beta": layout.beta}
            back, back_meta = read_instance(write_instance(inst, meta))
            assert back == inst and back_meta == meta
    report("9 serialization round-trip", started, 1.0)
