"""Exact-arithmetic toolkit for finite-group character tables.

Validation of the formal table axioms, reconstruction of a deleted row or
column from the remaining entries, screening of formally valid tables that
cannot belong to any group, and the feasibility arithmetic for groups with a
large character degree.
"""

from .cyclo import (
    Cyclotomic,
    ONE,
    ZERO,
    format_cyclotomic,
    parse_cyclotomic,
    root_of_unity,
)
from .table import (
    CharacterTable,
    ClassData,
    PartialTable,
    centralizer_orders,
    class_data,
    conjugate_closure_gap,
    element_orders,
    group_order,
    identify_identity_column,
    quotient_table,
    tables_equivalent,
)
from .checks import (
    PseudoVerdict,
    Sylow2AbIndex,
    ValidationReport,
    pseudo_check,
    sylow2_abelianization_index,
    sylow_is_cyclic,
    validate,
)
from .solve import (
    CaseTrace,
    SolveOutcome,
    gamma,
    int_sqrt,
    solve_missing_column,
    solve_missing_row,
)
from .degrees import (
    DegreePair,
    RamificationTriple,
    enumerate_pairs,
    feasible_ramifications,
    hls_max_order,
    lemma_scenarios,
)
from .fileio import (
    corpus_names,
    fixture_path,
    load_fixture,
    load_path,
    parse_table_file,
    puzzle_names,
    serialize_table,
)
from . import errors

__version__ = "0.1.0"

__all__ = [
    "Cyclotomic", "ONE", "ZERO", "format_cyclotomic", "parse_cyclotomic",
    "root_of_unity",
    "CharacterTable", "ClassData", "PartialTable", "centralizer_orders",
    "class_data", "conjugate_closure_gap", "element_orders", "group_order",
    "identify_identity_column", "quotient_table", "tables_equivalent",
    "PseudoVerdict", "Sylow2AbIndex", "ValidationReport", "pseudo_check",
    "sylow2_abelianization_index", "sylow_is_cyclic", "validate",
    "CaseTrace", "SolveOutcome", "gamma", "int_sqrt",
    "solve_missing_column", "solve_missing_row",
    "DegreePair", "RamificationTriple", "enumerate_pairs",
    "feasible_ramifications", "hls_max_order", "lemma_scenarios",
    "corpus_names", "fixture_path", "load_fixture", "load_path",
    "parse_table_file", "puzzle_names", "serialize_table",
    "errors",
]
