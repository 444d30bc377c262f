"""Fixed-weights knapsack toolkit.

Reduces 3-SAT to 1-in-3-SAT, compiles 1-in-3-SAT formulas into knapsack
instances whose weights depend only on the formula dimensions (k, m), solves
knapsack instances exactly by three methods, and cross-checks every step
against brute-force oracles at small scale.
"""

from .core import (
    Clause,
    CnfFormula,
    GuardError,
    KnapsackInstance,
    Literal,
    Solution,
    eval_clause,
    eval_formula,
    negate,
    validate_instance,
)
from .gadgets import (
    GadgetTrace,
    PaddedFormula,
    brute_force_sat,
    gadget_completions,
    gadget_transform,
    pad_to_three,
)
from .reduction import (
    AggregateForm,
    ReductionLayout,
    VariableLayout,
    aggregate_equalities,
    build_layout,
    build_model,
    decode_digits,
    extract_assignment,
    fixed_weights,
    lift_assignment,
    reduce_formula,
    value_side,
)
from .solvers import (
    MaximalSubsetList,
    brute_force_knapsack,
    dp_solve,
    feasibility,
    maximal_feasible_subsets,
    solve_via_maximal,
)
from .formats import (
    FormatError,
    parse_dimacs,
    read_instance,
    write_dimacs,
    write_instance,
)
from .verify import (
    Report,
    check_aggregation,
    check_equivalence,
    check_gadget,
    run_suite,
)

__version__ = "0.1.0"
