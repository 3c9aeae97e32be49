"""Verification harness: property sweeps and numeric coordinate-ring oracles."""
from .checks import (
    InductionData,
    Report,
    Unsupported,
    check_collapse,
    check_duality,
    check_prop55,
    check_richardson_typeA,
    check_stage_independence,
)
from .oracle import (
    OracleConfig,
    OracleError,
    graded_decomposition,
    hilbert_oracle,
    realize,
)

__all__ = [
    "InductionData",
    "OracleConfig",
    "OracleError",
    "Report",
    "Unsupported",
    "check_collapse",
    "check_duality",
    "check_prop55",
    "check_richardson_typeA",
    "check_stage_independence",
    "graded_decomposition",
    "hilbert_oracle",
    "realize",
]
