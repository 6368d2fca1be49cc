"""Seeded generation of M_s and partial S-metric spaces by draw-and-repair.

A trial draws one grid value per multiset (the two pair multisets {p,p,t} and
{p,t,t} share a draw, as axiom 3 requires), then repairs violations by raising
entries only. Identity-axiom failures and values pushed above the grid
ceiling reject the trial.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ..axioms.checks import check_partial_s, validate_ms
from ..axioms.report import AxiomId, ValidationReport, Violation
from ..core.ops import pair_gap
from ..core.types import MsSpace, Triple
from .config import GenConfig, run_trials, trial_rng

log = logging.getLogger(__name__)

Table = Dict[Triple, Fraction]


@dataclass(frozen=True)
class SeparationWitness:
    """An M_s space that is not a partial S-metric space, with the failing condition."""

    space: MsSpace
    witness: Violation
    trial: int
    injected: bool = False


class _Rejected(Exception):
    pass


def _points(n: int) -> List[str]:
    return [str(i + 1) for i in range(n)]


def _draw_table(config: GenConfig, trial: int) -> Tuple[List[str], Table]:
    rng = trial_rng(config.seed, trial)
    points = _points(config.n)
    keys = list(combinations_with_replacement(points, 3))
    draws = rng.integers(len(config.value_grid), size=len(keys))
    table = {key: config.value_grid[int(d)] for key, d in zip(keys, draws)}
    for p, q, t in keys:
        # {p,t,t} takes the draw of {p,p,t}
        if p == q != t:
            table[(p, t, t)] = table[(p, p, t)]
    return points, table


def _raise(table: Table, key: Triple, value: Fraction, ceiling: Fraction) -> None:
    if value > ceiling:
        raise _Rejected(f"{' '.join(key)} would exceed the grid ceiling")
    if table[key] < value:
        table[key] = value


def _tie_pairs(table: Table, space: MsSpace) -> None:
    for i, p in enumerate(space.points):
        for t in space.points[i + 1 :]:
            a, b = space.key(p, p, t), space.key(t, t, p)
            top = max(table[a], table[b])
            table[a] = table[b] = top


def _raise_smallest_term(
    table: Table,
    space: MsSpace,
    violation: Violation,
    term_of: Callable[[str, str], Fraction],
    ceiling: Fraction,
) -> None:
    """Raise the smallest p≠t right-hand term of a quadruple violation by its deficit."""
    x, y, z, t = violation.witness
    deficit = violation.lhs - violation.rhs
    candidates = [(term_of(p, t), pos, p) for pos, p in enumerate((x, y, z)) if p != t]
    if not candidates:
        raise _Rejected(f"no raisable term for {' '.join(violation.witness)}")
    _, _, p = min(candidates)
    key = space.key(p, p, t)
    _raise(table, key, space.value(p, p, t) + deficit, ceiling)


def _repair_ms(table: Table, space: MsSpace, report: ValidationReport, ceiling: Fraction) -> None:
    if report.by_axiom(AxiomId.MS1):
        raise _Rejected("axiom 1 fails")
    ms2 = report.by_axiom(AxiomId.MS2)
    if ms2:
        for v in ms2:
            _raise(table, space.key(*v.witness), v.lhs, ceiling)
    else:
        for v in report.by_axiom(AxiomId.MS4):
            _raise_smallest_term(table, space, v, lambda p, t: pair_gap(space, p, t), ceiling)
    _tie_pairs(table, space)


def _repair_partial_s(table: Table, space: MsSpace, report: ValidationReport, ceiling: Fraction) -> None:
    if report.by_axiom(AxiomId.PS_i):
        raise _Rejected("condition (i) fails")
    ps3 = report.by_axiom(AxiomId.PS_iii)
    if ps3:
        for v in ps3:
            _raise(table, space.key(*v.witness[:3]), v.lhs, ceiling)
    else:
        for v in report.by_axiom(AxiomId.PS_ii):
            _raise_smallest_term(table, space, v, lambda p, t: space.value(p, p, t), ceiling)
    _tie_pairs(table, space)


def _build(points: Sequence[str], table: Table, name: str, provenance: Optional[dict] = None) -> MsSpace:
    return MsSpace(tuple(points), dict(table), True, name, dict(provenance or {}))


def _provenance(generator: str, config: GenConfig, trial: int, rounds: int) -> dict:
    return {"generator": generator, "seed": config.seed, "trial": trial, "repair_rounds": rounds}


def _ms_trial(config: GenConfig, trial: int) -> Optional[MsSpace]:
    points, table = _draw_table(config, trial)
    name = f"gen-ms-n{config.n}-s{config.seed}-t{trial}"
    try:
        for rounds in range(config.max_repair_rounds + 1):
            space = _build(points, table, name)
            report = validate_ms(space)
            if report.is_ms:
                return _build(points, table, name, _provenance("gen_ms", config, trial, rounds))
            if rounds == config.max_repair_rounds:
                break
            _repair_ms(table, space, report, config.ceiling)
    except _Rejected as e:
        log.debug("gen_ms trial %d rejected: %s", trial, e)
        return None
    log.debug("gen_ms trial %d: repair did not converge", trial)
    return None


def _partial_s_trial(config: GenConfig, trial: int) -> Optional[MsSpace]:
    points, table = _draw_table(config, trial)
    name = f"gen-ps-n{config.n}-s{config.seed}-t{trial}"
    try:
        for rounds in range(config.max_repair_rounds + 1):
            space = _build(points, table, name)
            ps = check_partial_s(space)
            if ps.is_partial_s:
                ms = validate_ms(space)
                if ms.is_ms:
                    return _build(points, table, name, _provenance("gen_partial_s", config, trial, rounds))
                # partial-S but not M_s (axiom 4 can be stricter than condition (ii))
                if rounds == config.max_repair_rounds:
                    break
                _repair_ms(table, space, ms, config.ceiling)
                continue
            if rounds == config.max_repair_rounds:
                break
            _repair_partial_s(table, space, ps, config.ceiling)
    except _Rejected as e:
        log.debug("gen_partial_s trial %d rejected: %s", trial, e)
        return None
    log.debug("gen_partial_s trial %d: repair did not converge", trial)
    return None


def _separation_trial(config: GenConfig, trial: int) -> Optional[SeparationWitness]:
    space = _ms_trial(config, trial)
    if space is None:
        return None
    ps = check_partial_s(space)
    if ps.is_partial_s:
        return None
    witness = ps.primary_violation
    assert witness is not None
    return SeparationWitness(space=space, witness=witness, trial=trial)


def _exhausted(what: str, config: GenConfig) -> None:
    warnings.warn(f"{what}: no instance found in {config.trials} trials (n={config.n}, seed={config.seed})")


def gen_ms(config: GenConfig) -> Optional[MsSpace]:
    """First trial whose repaired table passes `validate_ms`, or None."""
    found = run_trials(config, _ms_trial, desc="gen_ms")
    if found is None:
        _exhausted("gen_ms", config)
        return None
    return found[1]


def gen_partial_s(config: GenConfig) -> Optional[MsSpace]:
    """First trial passing `check_partial_s`; accepted outputs also pass `validate_ms`."""
    found = run_trials(config, _partial_s_trial, desc="gen_partial_s")
    if found is None:
        _exhausted("gen_partial_s", config)
        return None
    return found[1]


def find_ms_not_partial_s(
    config: GenConfig, initial: Iterable[MsSpace] = ()
) -> Optional[SeparationWitness]:
    """Search for an M_s space that fails the partial S-metric conditions.

    Spaces in `initial` are tried first, in order, and reported with
    ``injected=True`` and their position as `trial`.
    """
    for position, space in enumerate(initial):
        if not validate_ms(space).is_ms:
            continue
        ps = check_partial_s(space)
        if not ps.is_partial_s:
            assert ps.primary_violation is not None
            return SeparationWitness(space=space, witness=ps.primary_violation, trial=position, injected=True)

    found = run_trials(config, _separation_trial, desc="find_ms_not_partial_s")
    if found is None:
        _exhausted("find_ms_not_partial_s", config)
        return None
    log.info("separating instance found at trial %d: %s", found[0], found[1].witness.describe())
    return found[1]
