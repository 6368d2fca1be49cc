"""Derived quantities of a candidate M_s-space.

`min_self`/`max_self` are the smallest/largest of the three self-distances
m_s(p,p,p) of a triple. `pair_gap(x, y)` is m_s(x,x,y) − min_self(x,x,y), the
quantity behind balls, convergence and the sequential-continuity inequality.

The `scaled_*` helpers return integer numpy arrays in the units of
`MsSpace.scaled_tensor()`; callers divide by the scale only when reporting.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .types import MsSpace


def ms_value(space: MsSpace, x: str, y: str, z: str) -> Fraction:
    return space.value(x, y, z)


def min_self(space: MsSpace, x: str, y: str, z: str) -> Fraction:
    return min(space.self_distance(x), space.self_distance(y), space.self_distance(z))


def max_self(space: MsSpace, x: str, y: str, z: str) -> Fraction:
    return max(space.self_distance(x), space.self_distance(y), space.self_distance(z))


def pair_gap(space: MsSpace, x: str, y: str) -> Fraction:
    """m_s(x,x,y) − m_{s x,x,y}."""
    return space.value(x, x, y) - min(space.self_distance(x), space.self_distance(y))


def pair_spread(space: MsSpace, x: str, y: str) -> Fraction:
    """M_{s x,x,y} − m_{s x,x,y}."""
    sx, sy = space.self_distance(x), space.self_distance(y)
    return max(sx, sy) - min(sx, sy)


def scaled_self(space: MsSpace) -> np.ndarray:
    M, _ = space.scaled_tensor()
    idx = np.arange(space.n)
    return M[idx, idx, idx]


def scaled_min3(space: MsSpace) -> np.ndarray:
    """mins[i, j, k] = min of the three self-distances."""
    s = scaled_self(space)
    return np.minimum(np.minimum(s[:, None, None], s[None, :, None]), s[None, None, :])


def scaled_max3(space: MsSpace) -> np.ndarray:
    s = scaled_self(space)
    return np.maximum(np.maximum(s[:, None, None], s[None, :, None]), s[None, None, :])


def scaled_pair_values(space: MsSpace) -> np.ndarray:
    """P[p, t] = m_s(p,p,t)."""
    M, _ = space.scaled_tensor()
    idx = np.arange(space.n)
    return M[idx, idx, :]


def scaled_gap_matrix(space: MsSpace) -> np.ndarray:
    """G[p, t] = m_s(p,p,t) − min(m_s(p,p,p), m_s(t,t,t))."""
    s = scaled_self(space)
    return scaled_pair_values(space) - np.minimum(s[:, None], s[None, :])
