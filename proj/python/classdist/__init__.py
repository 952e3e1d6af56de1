"""Exact verification of conjugacy-class distribution over cosets.

Thin Python surface over the C++ core: arithmetic helpers, permutation
groups with coset labelings, exact class tables, and the divisor-indexed
matrix checks.  All values are exact (ints and fractions.Fraction).
"""

from ._core import (
    ArgumentDomainError,
    CosetStructure,
    Group,
    GroupSpecParseError,
    HypothesisError,
    OrderCapError,
    build_coset_structure,
    class_table,
    divisor_set,
    eigenspace_dimensions,
    generating_coset_profile,
    kernel_witness,
    lhs_determinant,
    lhs_matrix,
    matrix_index,
    mobius,
    parse_group_spec,
    rhs_matrix,
    run_corpus,
    tau,
    totient,
    transfer_matrix,
    verify_group,
    verify_prime_power_kernel,
    verify_spectrum,
    verify_tensor_factorization,
)

__all__ = [
    "ArgumentDomainError",
    "CosetStructure",
    "Group",
    "GroupSpecParseError",
    "HypothesisError",
    "OrderCapError",
    "build_coset_structure",
    "class_table",
    "divisor_set",
    "eigenspace_dimensions",
    "generating_coset_profile",
    "kernel_witness",
    "lhs_determinant",
    "lhs_matrix",
    "matrix_index",
    "mobius",
    "parse_group_spec",
    "rhs_matrix",
    "run_corpus",
    "tau",
    "totient",
    "transfer_matrix",
    "verify_group",
    "verify_prime_power_kernel",
    "verify_spectrum",
    "verify_tensor_factorization",
]
