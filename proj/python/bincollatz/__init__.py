"""Exact binary-fraction Collatz dynamics."""

from ._bincollatz import (
    BinaryFraction,
    DomainError,
    IoError,
    MalformedInput,
    audit_length_deltas,
    binary_step,
    circle_iterate,
    circle_preimage,
    circle_step,
    classify_branch,
    collatz_step,
    critical_point,
    embed,
    epsilon_bound,
    family_member,
    head_tail_classify,
    is_predecessor,
    kstar_scan,
    mu,
    reduced_step,
    run_cell,
    run_cli,
    run_trajectory,
    to_decimal,
    two_adic_valuation,
    verify_range,
)

__all__ = [
    "BinaryFraction",
    "DomainError",
    "IoError",
    "MalformedInput",
    "audit_length_deltas",
    "binary_step",
    "circle_iterate",
    "circle_preimage",
    "circle_step",
    "classify_branch",
    "collatz_step",
    "critical_point",
    "embed",
    "epsilon_bound",
    "family_member",
    "head_tail_classify",
    "is_predecessor",
    "kstar_scan",
    "mu",
    "reduced_step",
    "run_cell",
    "run_cli",
    "run_trajectory",
    "to_decimal",
    "two_adic_valuation",
    "verify_range",
]
