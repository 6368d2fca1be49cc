"""Axiom verification for candidate M_s-spaces.

- `validate_ms`: the four M_s axioms (plus the optional strengthened identity check)
- `check_partial_s`: conditions (i)–(iv) of a partial S-metric
- `classify`: both, for placing a space in the hierarchy
"""

from .checks import (
    VIOLATION_CAP,
    check_ms_axiom1,
    check_ms_axiom2,
    check_ms_axiom3,
    check_ms_axiom4,
    check_partial_s,
    classify,
    replay_violation,
    validate_ms,
)
from .report import AxiomId, Classification, ValidationReport, Violation

__all__ = [
    "AxiomId",
    "Violation",
    "ValidationReport",
    "Classification",
    "VIOLATION_CAP",
    "check_ms_axiom1",
    "check_ms_axiom2",
    "check_ms_axiom3",
    "check_ms_axiom4",
    "validate_ms",
    "check_partial_s",
    "classify",
    "replay_violation",
]
