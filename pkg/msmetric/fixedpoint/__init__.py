"""Contraction analysis, Picard iteration and the fixed-point theorem harness."""

from .contraction import (
    BANACH_BOUND,
    KANNAN_BOUND,
    ContractionKind,
    ContractionReport,
    analyze,
    banach_constant,
    kannan_constant,
    phi_check,
)
from .harness import TheoremCheck, theorem_harness
from .picard import (
    CycleDetectedError,
    IterationLimitError,
    SolveTrace,
    enumerate_fixed_points,
    picard,
)

__all__ = [
    "BANACH_BOUND",
    "KANNAN_BOUND",
    "ContractionKind",
    "ContractionReport",
    "analyze",
    "banach_constant",
    "kannan_constant",
    "phi_check",
    "SolveTrace",
    "CycleDetectedError",
    "IterationLimitError",
    "picard",
    "enumerate_fixed_points",
    "TheoremCheck",
    "theorem_harness",
]
