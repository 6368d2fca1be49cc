from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Set, Tuple

from ..core.ops import pair_gap
from ..core.types import MsSpace, SelfMap

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolveTrace:
    """Picard orbit x_{n+1} = T(x_n) with per-step diagnostics.

    step_gaps[n]      = m_s(x_{n+1},x_{n+1},x_n) − m_{s x_{n+1},x_{n+1},x_n}
    step_distances[n] = m_s(x_{n+1},x_{n+1},x_n)
    """

    orbit: Tuple[str, ...]
    fixed_point: Optional[str]
    steps: int
    self_distance_at_fix: Optional[Fraction]
    step_gaps: Tuple[Fraction, ...]
    step_distances: Tuple[Fraction, ...]
    cycle: Tuple[str, ...] = ()

    @property
    def status(self) -> str:
        if self.fixed_point is not None:
            return "fixed"
        return "cycle" if self.cycle else "limit"


class CycleDetectedError(RuntimeError):
    """The orbit re-entered an earlier point without reaching a fixed point."""

    def __init__(self, trace: SolveTrace):
        super().__init__(f"orbit entered a cycle: {' '.join(trace.cycle)}")
        self.trace = trace
        self.cycle = trace.cycle


class IterationLimitError(RuntimeError):
    def __init__(self, trace: SolveTrace, max_iter: int):
        super().__init__(f"no fixed point within {max_iter} iterations")
        self.trace = trace
        self.max_iter = max_iter


def _trace(space: MsSpace, orbit: List[str], *, fixed: Optional[str] = None, cycle: Tuple[str, ...] = ()) -> SolveTrace:
    steps = list(zip(orbit[1:], orbit))
    return SolveTrace(
        orbit=tuple(orbit),
        fixed_point=fixed,
        steps=len(orbit) - 1,
        self_distance_at_fix=space.self_distance(fixed) if fixed is not None else None,
        step_gaps=tuple(pair_gap(space, nxt, cur) for nxt, cur in steps),
        step_distances=tuple(space.value(nxt, nxt, cur) for nxt, cur in steps),
        cycle=cycle,
    )


def picard(space: MsSpace, T: SelfMap, x0: str, max_iter: Optional[int] = None) -> SolveTrace:
    """Iterate T from x0 until x_{n+1} = x_n.

    Raises CycleDetectedError when the orbit revisits a point (a decisive
    verdict in a finite space) and IterationLimitError after `max_iter` steps
    (default 4·n).
    """
    T.check_space(space)
    space.index(x0)
    if max_iter is None:
        max_iter = 4 * space.n
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")

    orbit = [x0]
    seen: Dict[str, int] = {x0: 0}
    for _ in range(max_iter):
        cur = orbit[-1]
        nxt = T(cur)
        orbit.append(nxt)
        if nxt == cur:
            log.debug("picard from %s: fixed point %s after %d steps", x0, nxt, len(orbit) - 1)
            return _trace(space, orbit, fixed=nxt)
        if nxt in seen:
            cycle = tuple(orbit[seen[nxt] : -1])
            raise CycleDetectedError(_trace(space, orbit, cycle=cycle))
        seen[nxt] = len(orbit) - 1
    raise IterationLimitError(_trace(space, orbit), max_iter)


def enumerate_fixed_points(space: MsSpace, T: SelfMap) -> Set[str]:
    T.check_space(space)
    return {p for p in space.points if T(p) == p}
