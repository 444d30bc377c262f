import random

import pytest

from fwknap import Clause, CnfFormula, KnapsackInstance, Literal


def random_instance(rng, max_n=16, max_coeff=10**6):
    n = rng.randint(1, max_n)
    weights = tuple(rng.randint(0, max_coeff) for _ in range(n))
    values = tuple(rng.randint(0, max_coeff) for _ in range(n))
    capacity = rng.randint(0, max(sum(weights), 1))
    bound = rng.randint(0, max(sum(values), 1))
    return KnapsackInstance(weights, capacity, values, bound)


def random_formula(rng, k, m):
    """A random 1..3-literal clause list over variables 1..k."""
    clauses = []
    for _ in range(m):
        size = rng.randint(1, min(3, 2 * k))
        lits = rng.sample(
            [Literal(j, pos) for j in range(1, k + 1) for pos in (True, False)], size
        )
        clauses.append(Clause(lits))
    return CnfFormula(k, clauses)


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def paper_formula():
    """The two-clause worked example: (x1|x2|x3) & (x1|~x2|~x3), k=3."""
    return CnfFormula(
        3,
        [
            Clause([Literal(1), Literal(2), Literal(3)]),
            Clause([Literal(1), Literal(2, False), Literal(3, False)]),
        ],
    )
