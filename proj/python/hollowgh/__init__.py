"""Exact computations for hollow Garsia-Haiman modules."""

from ._core import (
    ConsistencyError,
    DimensionError,
    ParseError,
    PreconditionError,
    ResourceError,
    annihilation_check,
    bitableau,
    delta,
    domino_count,
    expected_total,
    gamma_n,
    harmonic_series,
    hilbert_closed,
    hollow_cells,
    run_cli,
    straighten,
    verify_independence,
)

__all__ = [
    "ConsistencyError",
    "DimensionError",
    "ParseError",
    "PreconditionError",
    "ResourceError",
    "annihilation_check",
    "bitableau",
    "delta",
    "domino_count",
    "expected_total",
    "gamma_n",
    "harmonic_series",
    "hilbert_closed",
    "hollow_cells",
    "run_cli",
    "straighten",
    "verify_independence",
]
