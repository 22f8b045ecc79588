"""Exact verification of Fibonacci/Lucas infinite product identities."""

from ._core import (
    CertificationError,
    DivisionByZero,
    ExactCapExceeded,
    GoldenExt,
    IndexCapExceeded,
    InvalidParams,
    VerificationReport,
    fib,
    lhs_term,
    list_identities,
    lucas,
    partial_product,
    phi_power,
    rhs_closed_form,
    special_evaluations,
    tail_bound,
    to_decimal,
    verify_exact,
    verify_limit,
)

__all__ = [
    "CertificationError",
    "DivisionByZero",
    "ExactCapExceeded",
    "GoldenExt",
    "IndexCapExceeded",
    "InvalidParams",
    "VerificationReport",
    "fib",
    "lhs_term",
    "list_identities",
    "lucas",
    "partial_product",
    "phi_power",
    "rhs_closed_form",
    "special_evaluations",
    "tail_bound",
    "to_decimal",
    "verify_exact",
    "verify_limit",
]
