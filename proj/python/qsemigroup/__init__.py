"""Numerical semigroup invariants with simulated quantum search and counting."""

from ._qsemigroup import (
    NumericalSemigroup,
    QSemigroupError,
    RegisterLayout,
    apery_set,
    collect_all_solutions,
    contains,
    counting_distribution,
    default_counting_bits,
    denumerant,
    expected_coupon_trials,
    factorizations,
    frobenius,
    gaps,
    genus,
    invariant_json,
    iteration_csv,
    solve_nsmp,
    solve_sdp,
)

__version__ = "0.1.0"

__all__ = [
    "NumericalSemigroup",
    "QSemigroupError",
    "RegisterLayout",
    "apery_set",
    "collect_all_solutions",
    "contains",
    "counting_distribution",
    "default_counting_bits",
    "denumerant",
    "expected_coupon_trials",
    "factorizations",
    "frobenius",
    "gaps",
    "genus",
    "invariant_json",
    "iteration_csv",
    "solve_nsmp",
    "solve_sdp",
]
