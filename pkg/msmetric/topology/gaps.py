"""Balls, convergence/Cauchy diagnostics and the sequential-continuity inequality.

A finite sequence cannot show a limit, so the verdicts here look at the tail
quarter of the given prefix and require exact constancy there (the
"finite-prefix surrogate"). Orbits produced by Picard iteration in a finite
space are eventually periodic, and a converging one is eventually constant, which
this surrogate detects exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Set, Tuple

import numpy as np
import pandas as pd

from ..core.ops import pair_gap, pair_spread, scaled_gap_matrix
from ..core.types import MsSpace, ValueLike, parse_value

SURROGATE_LABEL = "finite-prefix surrogate"


def _tail_length(count: int) -> int:
    return max(1, -(-count // 4)) if count else 0


@dataclass(frozen=True)
class GapProfile:
    """Per-element gaps and self-distance spreads along a finite sequence.

    For `convergence_gaps`, gaps[n] = m_s(x_n,x_n,x) − m_{s x_n,x_n,x} and spread[n] is
    M − m for the same triple. For `cauchy_profile` both lists follow the
    consecutive pairs (x_n, x_n, x_{n+1}) and `pair_gaps` holds the full n×m table;
    its verdict needs one gap value across all tail pairs n < m and a constant
    consecutive spread.
    """

    seq: Tuple[str, ...]
    limit: Optional[str]
    gaps: Tuple[Fraction, ...]
    spread: Tuple[Fraction, ...]
    verdict: bool
    kind: str
    complete_like: Optional[bool] = None
    pair_gaps: Tuple[Tuple[Fraction, ...], ...] = ()
    label: str = field(default=SURROGATE_LABEL)

    @property
    def verdict_name(self) -> str:
        if self.kind == "convergence":
            return "converged" if self.verdict else "not-converged"
        return "cauchy-like" if self.verdict else "not-cauchy-like"

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"gap": list(self.gaps), "spread": list(self.spread)})


def ball(space: MsSpace, x: str, eta: ValueLike) -> Set[str]:
    """Closed ball { y : m_s(x,x,y) − m_{s x,x,y} ≤ eta }."""
    eta = parse_value(eta)
    space.index(x)
    return {y for y in space.points if pair_gap(space, x, y) <= eta}


def ball_sorted(space: MsSpace, x: str, eta: ValueLike) -> List[str]:
    members = ball(space, x, eta)
    return [p for p in space.points if p in members]


def convergence_gaps(space: MsSpace, seq: Sequence[str], x: str) -> GapProfile:
    if not seq:
        raise ValueError("sequence must be non-empty")
    space.index(x)
    gaps = tuple(pair_gap(space, p, x) for p in seq)
    spread = tuple(pair_spread(space, p, x) for p in seq)
    tail = _tail_length(len(seq))
    converged = all(g == 0 for g in gaps[-tail:])
    complete = converged and all(s == 0 for s in spread[-tail:])
    return GapProfile(
        seq=tuple(seq),
        limit=x,
        gaps=gaps,
        spread=spread,
        verdict=converged,
        kind="convergence",
        complete_like=complete,
    )


def cauchy_profile(space: MsSpace, seq: Sequence[str]) -> GapProfile:
    if not seq:
        raise ValueError("sequence must be non-empty")
    for p in seq:
        space.index(p)
    pair_gaps = tuple(tuple(pair_gap(space, a, b) for b in seq) for a in seq)
    steps = list(zip(seq, seq[1:]))
    gaps = tuple(pair_gap(space, a, b) for a, b in steps)
    spread = tuple(pair_spread(space, a, b) for a, b in steps)
    tail = _tail_length(len(steps))
    # gaps over every pair n < m of the last tail + 1 elements; spreads over the last tail steps
    start = len(seq) - tail - 1
    tail_gaps = {pair_gaps[a][b] for a in range(start, len(seq)) for b in range(a + 1, len(seq))}
    cauchy = len(tail_gaps) <= 1 and len(set(spread[-tail:])) <= 1 if tail else True
    return GapProfile(
        seq=tuple(seq),
        limit=None,
        gaps=gaps,
        spread=spread,
        verdict=cauchy,
        kind="cauchy",
        pair_gaps=pair_gaps,
    )


@dataclass(frozen=True)
class LemmaCheck:
    holds: bool
    lhs: Fraction
    rhs: Fraction


def lemma1_check(space: MsSpace, xp: str, yp: str, x: str, y: str) -> LemmaCheck:
    """|gap(xp,yp) − gap(x,y)| ≤ 2[gap(xp,x) + gap(yp,y)] for one quadruple."""
    lhs = abs(pair_gap(space, xp, yp) - pair_gap(space, x, y))
    rhs = 2 * (pair_gap(space, xp, x) + pair_gap(space, yp, y))
    return LemmaCheck(holds=lhs <= rhs, lhs=lhs, rhs=rhs)


@dataclass(frozen=True)
class LemmaSweep:
    holds: bool
    checks: int
    failures: int
    first_failure: Optional[Tuple[str, str, str, str]] = None


def lemma1_sweep(space: MsSpace) -> LemmaSweep:
    """Evaluate the sequential-continuity inequality on all n⁴ quadruples (xp, yp, x, y)."""
    G = scaled_gap_matrix(space)
    n = space.n
    failures = 0
    first = None
    for a in range(n):
        # lhs[b, c, d] = |G[a,b] − G[c,d]|, rhs[b, c, d] = 2(G[a,c] + G[b,d])
        diff = G[a][:, None, None] - G[None, :, :]
        lhs = np.where(np.asarray(diff < 0, dtype=bool), -diff, diff)
        rhs = 2 * (G[a][None, :, None] + G[:, None, :])
        bad = np.asarray(lhs > rhs, dtype=bool)
        count = int(bad.sum())
        if count and first is None:
            b, c, d = (int(v) for v in np.argwhere(bad)[0])
            first = (space.points[a], space.points[b], space.points[c], space.points[d])
        failures += count
    return LemmaSweep(holds=failures == 0, checks=n**4, failures=failures, first_failure=first)
