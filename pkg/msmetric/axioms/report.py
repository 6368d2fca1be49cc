from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import pandas as pd

from ..core.types import format_value


class AxiomId(Enum):
    """Axioms of M_s-metrics (MS*) and partial S-metrics (PS_*)."""

    MS1 = "MS1"
    MS2 = "MS2"
    MS3 = "MS3"
    MS4 = "MS4"
    MS1_STRONG = "MS1_STRONG"
    PS_i = "PS_i"
    PS_ii = "PS_ii"
    PS_iii = "PS_iii"
    PS_iv = "PS_iv"

    @property
    def is_ms(self) -> bool:
        return self in (AxiomId.MS1, AxiomId.MS2, AxiomId.MS3, AxiomId.MS4)

    @property
    def is_partial_s(self) -> bool:
        return self.value.startswith("PS_")


@dataclass(frozen=True)
class Violation:
    """One failed axiom instance, replayable against the raw table."""

    axiom: AxiomId
    witness: Tuple[str, ...]
    lhs: Fraction
    rhs: Fraction
    direction: str = ""  # "only-if" / "if" for the biconditional axioms

    def describe(self) -> str:
        if self.axiom is AxiomId.PS_iii:
            x, y, z, p = self.witness
            return f"PS_iii {x} {y} {z} / {p}, {format_value(self.lhs)} > {format_value(self.rhs)}"
        parts = [self.axiom.value, *self.witness, format_value(self.lhs), format_value(self.rhs)]
        if self.direction:
            parts.append(self.direction)
        return " ".join(parts)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of one axiom sweep.

    `is_ms` is None when the M_s axioms were not swept, `is_partial_s` likewise.
    `violations` is capped per axiom; `violation_totals` holds the full counts.
    """

    is_ms: Optional[bool]
    is_partial_s: Optional[bool]
    violations: Tuple[Violation, ...] = ()
    checks_performed: int = 0
    checks_by_axiom: Dict[str, int] = field(default_factory=dict)
    violation_totals: Dict[str, int] = field(default_factory=dict)
    strengthened_holds: Optional[bool] = None

    def by_axiom(self, axiom: AxiomId) -> List[Violation]:
        return [v for v in self.violations if v.axiom is axiom]

    @property
    def primary_violation(self) -> Optional[Violation]:
        """Headline witness: a PS_iii violation on three distinct points if any, else the first violation."""
        distinct = [v for v in self.by_axiom(AxiomId.PS_iii) if len(set(v.witness[:3])) == 3]
        if distinct:
            return distinct[0]
        return self.violations[0] if self.violations else None

    def to_frame(self) -> pd.DataFrame:
        rows = [
            {
                "axiom": v.axiom.value,
                "witness": " ".join(v.witness),
                "lhs": v.lhs,
                "rhs": v.rhs,
                "direction": v.direction,
            }
            for v in self.violations
        ]
        return pd.DataFrame(rows, columns=["axiom", "witness", "lhs", "rhs", "direction"])


@dataclass(frozen=True)
class Classification:
    """Where a space sits in the partial-S ⊂ M_s hierarchy."""

    is_ms: bool
    is_partial_s: bool
    ms_report: ValidationReport
    partial_s_report: ValidationReport

    @property
    def witnesses(self) -> Tuple[Violation, ...]:
        return self.ms_report.violations + self.partial_s_report.violations

    @property
    def witness(self) -> Optional[Violation]:
        return self.partial_s_report.primary_violation or self.ms_report.primary_violation
