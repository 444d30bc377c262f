import pytest
from hypothesis import given, strategies as st

from fwknap import (
    Clause,
    CnfFormula,
    KnapsackInstance,
    Literal,
    eval_clause,
    negate,
    validate_instance,
)

literals = st.builds(
    Literal, st.integers(min_value=1, max_value=10**6), st.booleans()
)


def test_negate_flips_polarity():
    assert negate(Literal(1)) == Literal(1, False)
    assert negate(Literal(3, False)) == Literal(3)


@given(literals)
def test_negate_is_involution(lit):
    assert negate(negate(lit)) == lit
    assert negate(lit).index == lit.index


def test_literal_index_must_be_positive():
    with pytest.raises(ValueError):
        Literal(0)


def test_clause_dedup_keeps_order():
    c = Clause([Literal(1), Literal(1), Literal(2)])
    assert c.literals == (Literal(1), Literal(2))


def test_clause_rejects_empty_and_oversized():
    with pytest.raises(ValueError):
        Clause([])
    with pytest.raises(ValueError):
        Clause([Literal(j) for j in range(1, 5)])


def test_clause_accepts_complementary_pair():
    c = Clause([Literal(1), Literal(1, False), Literal(2)])
    assert len(c) == 3


def test_eval_clause_examples():
    c = Clause([Literal(1), Literal(2), Literal(3)])
    assert not eval_clause(c, (1, 1, 0), "exactly_one")
    assert eval_clause(c, (1, 1, 0), "at_least_one")
    c2 = Clause([Literal(1), Literal(2, False), Literal(3, False)])
    assert eval_clause(c2, (0, 1, 0), "exactly_one")
    c3 = Clause([Literal(1), Literal(2)])
    assert not eval_clause(c3, (0, 0), "at_least_one")


def test_eval_clause_rejects_short_assignment():
    with pytest.raises(ValueError):
        eval_clause(Clause([Literal(3)]), (0, 1), "exactly_one")


@given(
    st.lists(st.builds(Literal, st.integers(1, 4), st.booleans()), min_size=1, max_size=3),
    st.tuples(*[st.integers(0, 1)] * 4),
)
def test_exactly_one_implies_at_least_one(lits, assignment):
    c = Clause(lits)
    if eval_clause(c, assignment, "exactly_one"):
        assert eval_clause(c, assignment, "at_least_one")


def test_formula_rejects_out_of_range_variable():
    with pytest.raises(ValueError):
        CnfFormula(2, [Clause([Literal(3)])])


def test_validate_instance():
    ok = KnapsackInstance((1, 2), 2, (3, 4), 3)
    assert validate_instance(ok) == []
    bad = KnapsackInstance((1, 2), 2, (3,), 3)
    assert any("values length" in e for e in validate_instance(bad))
    empty = KnapsackInstance((), 0, (), 0)
    assert validate_instance(empty) == []
