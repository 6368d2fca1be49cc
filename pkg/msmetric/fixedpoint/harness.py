from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from ..core.types import MsSpace, PhiFunction, SelfMap
from .contraction import ContractionKind, ContractionReport, analyze
from .picard import CycleDetectedError, IterationLimitError, SolveTrace, enumerate_fixed_points, picard

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class TheoremCheck:
    """Conclusions of the fixed-point theorems, checked on one (space, map) pair.

    Conclusions are only evaluated for admissible maps; otherwise they are None.
    For PHI the theorem itself claims uniqueness only; `self_distance_zero`
    records the stronger m_s(u,u,u) = 0 that its proof derives, so a failure
    can be told apart via `headline_holds`.
    """

    kind: ContractionKind
    admissible: bool
    report: ContractionReport
    fixed_points: Tuple[str, ...] = ()
    unique_fixed_point: Optional[bool] = None
    fixed_point: Optional[str] = None
    self_distance_zero: Optional[bool] = None
    picard_reaches_fixed_point: Optional[bool] = None
    traces: Tuple[SolveTrace, ...] = ()
    failed_starts: Tuple[str, ...] = ()

    @property
    def headline_holds(self) -> bool:
        return bool(self.admissible and self.unique_fixed_point and self.picard_reaches_fixed_point)

    @property
    def conclusions_hold(self) -> bool:
        return self.headline_holds and bool(self.self_distance_zero)


def theorem_harness(
    space: MsSpace, T: SelfMap, kind: ContractionKind, phi: Optional[PhiFunction] = None
) -> TheoremCheck:
    """Check unique fixed point, m_s(u,u,u) = 0 and Picard convergence from every start.

    The space is treated as complete (it is finite and validated).
    """
    kind = ContractionKind(kind)
    report = analyze(space, T, kind, phi)
    if not report.admissible:
        return TheoremCheck(kind=kind, admissible=False, report=report)

    fixed = tuple(p for p in space.points if p in enumerate_fixed_points(space, T))
    unique = len(fixed) == 1
    u = fixed[0] if unique else None
    zero = unique and space.self_distance(u) == 0

    traces = []
    failed = []
    for start in space.points:
        try:
            trace = picard(space, T, start)
        except (CycleDetectedError, IterationLimitError) as e:
            traces.append(e.trace)
            failed.append(start)
            continue
        traces.append(trace)
        if trace.fixed_point != u:
            failed.append(start)

    check = TheoremCheck(
        kind=kind,
        admissible=True,
        report=report,
        fixed_points=fixed,
        unique_fixed_point=unique,
        fixed_point=u,
        self_distance_zero=zero,
        picard_reaches_fixed_point=not failed,
        traces=tuple(traces),
        failed_starts=tuple(failed),
    )
    if not check.conclusions_hold:
        log.warning("theorem conclusions fail for %s under %s: %s", space.name or "<space>", kind.value, check)
    return check
