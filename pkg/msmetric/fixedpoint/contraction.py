from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from ..core.types import MsSpace, PhiFunction, SelfMap

BANACH_BOUND = Fraction(1)
KANNAN_BOUND = Fraction(1, 2)


class ContractionKind(Enum):
    BANACH = "banach"
    KANNAN = "kannan"
    PHI = "phi"


@dataclass(frozen=True)
class ContractionReport:
    """Admissibility of a self-map under one contraction condition.

    For BANACH/KANNAN `constant` is the exact extremal ratio (k* or λ*) and
    `witness_values` the (numerator, denominator) at `witness`; `constant` is
    None when some pair has a zero denominator and a positive numerator
    (`infeasible_witness`). For PHI, `witness` is the first violating triple and
    `witness_values` its (lhs, rhs).
    """

    kind: ContractionKind
    admissible: bool
    constant: Optional[Fraction]
    witness: Tuple[str, ...] = ()
    witness_values: Tuple[Fraction, ...] = ()
    infeasible_witness: Optional[Tuple[str, str]] = None
    phi: Optional[PhiFunction] = None
    checks: int = 0


def _pair_names(space: MsSpace, pair: Tuple[int, int]) -> Tuple[str, str]:
    return space.points[pair[0]], space.points[pair[1]]


def _ratio_sweep(
    space: MsSpace,
    T: SelfMap,
    kind: ContractionKind,
    denominator: Callable[[int, int], int],
    bound: Fraction,
) -> ContractionReport:
    M, scale = space.scaled_tensor()
    img = T.index_array(space)
    n = space.n
    best: Optional[Fraction] = None
    witness: Tuple[int, int] = (0, 0)
    values: Tuple[int, int] = (0, 0)
    infeasible: Optional[Tuple[int, int]] = None
    for i in range(n):
        for j in range(n):
            num = int(M[img[i], img[i], img[j]])
            den = int(denominator(i, j))
            if den == 0:
                if num > 0:
                    if infeasible is None:
                        infeasible = (i, j)
                    continue
                ratio = Fraction(0)
            else:
                ratio = Fraction(num, den)
            if best is None or ratio > best:
                best, witness, values = ratio, (i, j), (num, den)
    if infeasible is not None:
        return ContractionReport(
            kind=kind,
            admissible=False,
            constant=None,
            witness=_pair_names(space, witness),
            witness_values=(Fraction(values[0], scale), Fraction(values[1], scale)),
            infeasible_witness=_pair_names(space, infeasible),
            checks=n * n,
        )
    assert best is not None
    return ContractionReport(
        kind=kind,
        admissible=best < bound,
        constant=best,
        witness=_pair_names(space, witness),
        witness_values=(Fraction(values[0], scale), Fraction(values[1], scale)),
        checks=n * n,
    )


def banach_constant(space: MsSpace, T: SelfMap) -> ContractionReport:
    """k* = max over (x, y) of m_s(Tx,Tx,Ty) / m_s(x,x,y); admissible iff k* < 1."""
    M, _ = space.scaled_tensor()
    return _ratio_sweep(space, T, ContractionKind.BANACH, lambda i, j: M[i, i, j], BANACH_BOUND)


def kannan_constant(space: MsSpace, T: SelfMap) -> ContractionReport:
    """λ* = max over (x, y) of m_s(Tx,Tx,Ty) / (m_s(x,x,Tx) + m_s(y,y,Ty)); admissible iff λ* < 1/2."""
    M, _ = space.scaled_tensor()
    img = T.index_array(space)
    idx = np.arange(space.n)
    displacement = M[idx, idx, img]
    return _ratio_sweep(
        space, T, ContractionKind.KANNAN, lambda i, j: displacement[i] + displacement[j], KANNAN_BOUND
    )


def phi_check(space: MsSpace, T: SelfMap, phi: PhiFunction) -> ContractionReport:
    """m_s(Tx,Ty,Tz) ≤ m_s(x,y,z) − φ(m_s(x,y,z)) over all ordered triples."""
    if not isinstance(phi, PhiFunction):
        raise ValueError("phi must be a PhiFunction")
    M, scale = space.scaled_tensor()
    img = T.index_array(space)
    lhs = M[np.ix_(img, img, img)]
    # lhs is an integer in scale units, so lhs ≤ r·scale ⇔ lhs ≤ floor(r·scale)
    thresholds: Dict[int, int] = {}
    for v in set(int(x) for x in M.flat):
        value = Fraction(v, scale)
        thresholds[v] = math.floor((value - phi(value)) * scale)
    dtype = M.dtype
    thr = np.array([thresholds[int(v)] for v in M.flat], dtype=dtype).reshape(M.shape)
    bad = np.asarray(lhs > thr, dtype=bool)
    n = space.n
    if not bad.any():
        return ContractionReport(kind=ContractionKind.PHI, admissible=True, constant=None, phi=phi, checks=n**3)
    i, j, k = (int(v) for v in np.argwhere(bad)[0])
    value = Fraction(int(M[i, j, k]), scale)
    return ContractionReport(
        kind=ContractionKind.PHI,
        admissible=False,
        constant=None,
        witness=(space.points[i], space.points[j], space.points[k]),
        witness_values=(Fraction(int(lhs[i, j, k]), scale), value - phi(value)),
        phi=phi,
        checks=n**3,
    )


def analyze(
    space: MsSpace, T: SelfMap, kind: ContractionKind, phi: Optional[PhiFunction] = None
) -> ContractionReport:
    kind = ContractionKind(kind)
    if kind is ContractionKind.BANACH:
        return banach_constant(space, T)
    if kind is ContractionKind.KANNAN:
        return kannan_constant(space, T)
    if phi is None:
        raise ValueError("a φ function is required for the phi contraction")
    return phi_check(space, T, phi)
