"""Exhaustive axiom sweeps for M_s-metrics and partial S-metrics.

Every sweep runs on the scaled integer tensor of the space, so each comparison
is exact. Witnesses are reported in lexicographic order of point indices
(declaration order) and capped at `VIOLATION_CAP` per axiom.

Symmetric-mode spaces are swept over index-sorted triples only (the value of a
multiset does not depend on the order of its points), which gives C(n+2, 3)
triples instead of n³ for MS2, MS4, PS_ii, PS_iii and MS1_STRONG. The pair
axioms (MS1, MS3, PS_i, PS_iv) always run over all n² ordered pairs.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from ..core.ops import (
    min_self,
    pair_gap,
    scaled_gap_matrix,
    scaled_min3,
    scaled_pair_values,
    scaled_self,
)
from ..core.types import MsSpace
from .report import AxiomId, Classification, ValidationReport, Violation

log = logging.getLogger(__name__)

VIOLATION_CAP = 1000


@dataclass
class _Sweep:
    axiom: AxiomId
    checks: int = 0
    total: int = 0
    violations: List[Violation] = field(default_factory=list)

    def add(self, violation: Violation) -> None:
        self.total += 1
        if len(self.violations) < VIOLATION_CAP:
            self.violations.append(violation)


def _canonical_mask(n: int) -> np.ndarray:
    I, J, K = np.indices((n, n, n))
    return (I <= J) & (J <= K)


def _names(space: MsSpace, idx: Iterable[int]) -> Tuple[str, ...]:
    return tuple(space.points[int(i)] for i in idx)


def _bool(a) -> np.ndarray:
    return np.asarray(a, dtype=bool)


def _sweep_identity(space: MsSpace, axiom: AxiomId) -> _Sweep:
    # m(x,x,x) = m(y,y,y) = m(x,x,y)  ⇔  x = y
    s = scaled_self(space)
    P = scaled_pair_values(space)
    n = space.n
    all_equal = _bool(s[:, None] == s[None, :]) & _bool(s[None, :] == P)
    bad = all_equal != np.eye(n, dtype=bool)
    sweep = _Sweep(axiom, checks=n * n)
    for i, j in np.argwhere(bad):
        sweep.add(
            Violation(
                axiom,
                _names(space, (i, j)),
                space.unscale(s[i]),
                space.unscale(P[i, j]),
                direction="only-if" if i != j else "if",
            )
        )
    return sweep


def _sweep_pair_symmetry(space: MsSpace, axiom: AxiomId) -> _Sweep:
    # m(x,x,y) = m(y,y,x); {x,x,y} and {x,y,y} are different multisets, so this
    # is a real constraint in symmetric mode too.
    P = scaled_pair_values(space)
    n = space.n
    bad = _bool(P != P.T)
    sweep = _Sweep(axiom, checks=n * n)
    for i, j in np.argwhere(bad):
        sweep.add(Violation(axiom, _names(space, (i, j)), space.unscale(P[i, j]), space.unscale(P[j, i])))
    return sweep


def _triple_scope(space: MsSpace) -> Tuple[np.ndarray, int]:
    n = space.n
    if space.symmetric:
        canon = _canonical_mask(n)
        return canon, int(canon.sum())
    return np.ones((n, n, n), dtype=bool), n**3


def _sweep_lower_bound(space: MsSpace) -> _Sweep:
    # MS2: m_{s x,y,z} ≤ m_s(x,y,z)
    M, _ = space.scaled_tensor()
    mins = scaled_min3(space)
    scope, checks = _triple_scope(space)
    bad = _bool(mins > M) & scope
    sweep = _Sweep(AxiomId.MS2, checks=checks)
    for i, j, k in np.argwhere(bad):
        sweep.add(Violation(AxiomId.MS2, _names(space, (i, j, k)), space.unscale(mins[i, j, k]), space.unscale(M[i, j, k])))
    return sweep


def _sweep_quadruples(space: MsSpace, axiom: AxiomId) -> _Sweep:
    """MS4 (gap form) or PS_ii (partial-S form), one x-slice at a time."""
    M, _ = space.scaled_tensor()
    n = space.n
    scope, triples = _triple_scope(space)
    if axiom is AxiomId.MS4:
        lhs_all = M - scaled_min3(space)
        R = scaled_gap_matrix(space)
        offset = np.zeros(n, dtype=M.dtype)
    else:
        lhs_all = M
        R = scaled_pair_values(space)
        offset = scaled_self(space)
    sweep = _Sweep(axiom, checks=triples * n)
    # MS4 is only read where its lhs and gap terms are non-negative; a negative gap is an MS2 failure.
    gap_ok = _bool(R >= 0)
    for i in range(n):
        # rhs[j, k, t] = R[i,t] + R[j,t] + R[k,t] − offset[t]
        rhs = R[i][None, None, :] + R[:, None, :] + R[None, :, :] - offset[None, None, :]
        bad = _bool(lhs_all[i][:, :, None] > rhs) & scope[i][:, :, None]
        if axiom is AxiomId.MS4:
            bad &= _bool(lhs_all[i] >= 0)[:, :, None]
            bad &= gap_ok[i][None, None, :] & gap_ok[:, None, :] & gap_ok[None, :, :]
        if not bad.any():
            continue
        for j, k, t in np.argwhere(bad):
            sweep.add(
                Violation(
                    axiom,
                    _names(space, (i, j, k, t)),
                    space.unscale(lhs_all[i, j, k]),
                    space.unscale(rhs[j, k, t]),
                )
            )
    return sweep


def _sweep_self_bound(space: MsSpace) -> _Sweep:
    # PS_iii: S_p(p,p,p) ≤ S_p(x,y,z) for p in the triple; witness (x, y, z, p)
    M, _ = space.scaled_tensor()
    s = scaled_self(space)
    n = space.n
    I, J, K = np.indices((n, n, n))
    rows: List[Tuple[int, int, int, int]] = []
    if space.symmetric:
        canon = _canonical_mask(n)
        positions = [(I, canon), (J, canon & (J != I)), (K, canon & (K != J))]
        checks = int(sum(int(mask.sum()) for _, mask in positions))
    else:
        positions = [(I, np.ones((n, n, n), dtype=bool))]
        checks = n**3
    for member, mask in positions:
        bad = _bool(s[member] > M) & mask
        for i, j, k in np.argwhere(bad):
            rows.append((int(i), int(j), int(k), int(member[i, j, k])))
    rows.sort()
    sweep = _Sweep(AxiomId.PS_iii, checks=checks)
    for i, j, k, p in rows:
        sweep.add(Violation(AxiomId.PS_iii, _names(space, (i, j, k, p)), space.unscale(s[p]), space.unscale(M[i, j, k])))
    return sweep


def _sweep_strengthened(space: MsSpace) -> _Sweep:
    # m(x,x,x) = m(y,y,y) = m(z,z,z) = m(x,y,z)  ⇔  x = y = z
    M, _ = space.scaled_tensor()
    s = scaled_self(space)
    n = space.n
    scope, checks = _triple_scope(space)
    all_equal = (
        _bool(s[:, None, None] == s[None, :, None])
        & _bool(s[None, :, None] == s[None, None, :])
        & _bool(s[None, None, :] == M)
    )
    I, J, K = np.indices((n, n, n))
    diagonal = (I == J) & (J == K)
    bad = (all_equal != diagonal) & scope
    sweep = _Sweep(AxiomId.MS1_STRONG, checks=checks)
    for i, j, k in np.argwhere(bad):
        sweep.add(
            Violation(
                AxiomId.MS1_STRONG,
                _names(space, (i, j, k)),
                space.unscale(s[i]),
                space.unscale(M[i, j, k]),
                direction="only-if" if not diagonal[i, j, k] else "if",
            )
        )
    return sweep


def check_ms_axiom1(space: MsSpace) -> List[Violation]:
    return _sweep_identity(space, AxiomId.MS1).violations


def check_ms_axiom2(space: MsSpace) -> List[Violation]:
    return _sweep_lower_bound(space).violations


def check_ms_axiom3(space: MsSpace) -> List[Violation]:
    return _sweep_pair_symmetry(space, AxiomId.MS3).violations


def check_ms_axiom4(space: MsSpace) -> List[Violation]:
    return _sweep_quadruples(space, AxiomId.MS4).violations


def _report(sweeps: Sequence[_Sweep], **verdicts) -> ValidationReport:
    return ValidationReport(
        violations=tuple(v for sw in sweeps for v in sw.violations),
        checks_performed=sum(sw.checks for sw in sweeps),
        checks_by_axiom={sw.axiom.value: sw.checks for sw in sweeps},
        violation_totals={sw.axiom.value: sw.total for sw in sweeps},
        **verdicts,
    )


def validate_ms(space: MsSpace, *, strengthened: bool = False) -> ValidationReport:
    """Sweep the four M_s axioms; with `strengthened`, also the three-way identity remark."""
    sweeps = [
        _sweep_identity(space, AxiomId.MS1),
        _sweep_lower_bound(space),
        _sweep_pair_symmetry(space, AxiomId.MS3),
        _sweep_quadruples(space, AxiomId.MS4),
    ]
    is_ms = all(sw.total == 0 for sw in sweeps)
    strong = None
    if strengthened:
        extra = _sweep_strengthened(space)
        strong = extra.total == 0
        sweeps.append(extra)
    log.debug("validate_ms %s: is_ms=%s checks=%d", space.name or "<space>", is_ms, sum(sw.checks for sw in sweeps))
    return _report(sweeps, is_ms=is_ms, is_partial_s=None, strengthened_holds=strong)


def check_partial_s(space: MsSpace) -> ValidationReport:
    """Sweep conditions (i)–(iv) of a partial S-metric."""
    sweeps = [
        _sweep_identity(space, AxiomId.PS_i),
        _sweep_quadruples(space, AxiomId.PS_ii),
        _sweep_self_bound(space),
        _sweep_pair_symmetry(space, AxiomId.PS_iv),
    ]
    is_partial_s = all(sw.total == 0 for sw in sweeps)
    log.debug("check_partial_s %s: is_partial_s=%s", space.name or "<space>", is_partial_s)
    return _report(sweeps, is_ms=None, is_partial_s=is_partial_s)


def classify(space: MsSpace) -> Classification:
    ms = validate_ms(space)
    ps = check_partial_s(space)
    return Classification(is_ms=bool(ms.is_ms), is_partial_s=bool(ps.is_partial_s), ms_report=ms, partial_s_report=ps)


def replay_violation(space: MsSpace, violation: Violation) -> bool:
    """Recompute a violation from the raw table: True iff lhs/rhs match and the axiom fails."""
    w = violation.witness
    ax = violation.axiom
    if ax in (AxiomId.MS1, AxiomId.PS_i):
        x, y = w
        lhs, rhs = space.self_distance(x), space.value(x, x, y)
        failed = (lhs == space.self_distance(y) == rhs) != (x == y)
    elif ax is AxiomId.MS1_STRONG:
        x, y, z = w
        lhs, rhs = space.self_distance(x), space.value(x, y, z)
        all_equal = lhs == space.self_distance(y) == space.self_distance(z) == rhs
        failed = all_equal != (x == y == z)
    elif ax is AxiomId.MS2:
        lhs, rhs = min_self(space, *w), space.value(*w)
        failed = lhs > rhs
    elif ax in (AxiomId.MS3, AxiomId.PS_iv):
        x, y = w
        lhs, rhs = space.value(x, x, y), space.value(y, y, x)
        failed = lhs != rhs
    elif ax is AxiomId.MS4:
        x, y, z, t = w
        lhs = space.value(x, y, z) - min_self(space, x, y, z)
        rhs = pair_gap(space, x, t) + pair_gap(space, y, t) + pair_gap(space, z, t)
        failed = lhs > rhs
    elif ax is AxiomId.PS_ii:
        x, y, z, t = w
        lhs = space.value(x, y, z)
        rhs = space.value(x, x, t) + space.value(y, y, t) + space.value(z, z, t) - space.self_distance(t)
        failed = lhs > rhs
    elif ax is AxiomId.PS_iii:
        x, y, z, p = w
        if p not in (x, y, z):
            return False
        lhs, rhs = space.self_distance(p), space.value(x, y, z)
        failed = lhs > rhs
    else:  # pragma: no cover
        raise ValueError(f"unknown axiom {ax}")
    return bool(failed) and lhs == violation.lhs and rhs == violation.rhs

