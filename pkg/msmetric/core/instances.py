from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Callable, Dict

from .types import MsSpace


def paper_example() -> MsSpace:
    """The three-point M_s-space on {1, 2, 3} that is not a partial S-metric space.

    Every pattern value is given once; symmetric mode makes the table total.
    """
    values = {
        ("1", "2", "3"): 6,
        ("1", "1", "2"): 8,
        ("2", "2", "1"): 8,
        ("1", "1", "1"): 8,
        ("1", "1", "3"): 7,
        ("3", "3", "1"): 7,
        ("3", "3", "2"): 7,
        ("2", "2", "3"): 7,
        ("2", "2", "2"): 9,
        ("3", "3", "3"): 5,
    }
    return MsSpace.from_values(["1", "2", "3"], values, symmetric=True, name="example1")


def discrete_space(n: int = 3) -> MsSpace:
    """m_s = 0 on (x,x,x) and 1 elsewhere, over points 1..n."""
    if n < 1:
        raise ValueError("n must be positive")
    points = [str(i + 1) for i in range(n)]
    values = {}
    for key in combinations_with_replacement(points, 3):
        values[key] = 0 if key[0] == key[2] else 1
    return MsSpace.from_values(points, values, symmetric=True, name=f"discrete{n}")


def two_point_space() -> MsSpace:
    """{a, b} with m_s(a,a,a)=0, m_s(b,b,b)=2 and every mixed multiset at 2."""
    values = {
        ("a", "a", "a"): 0,
        ("b", "b", "b"): 2,
        ("a", "a", "b"): 2,
        ("a", "b", "b"): 2,
    }
    return MsSpace.from_values(["a", "b"], values, symmetric=True, name="two-point")


def hierarchy_gap_space() -> MsSpace:
    """A partial S-metric space on {x, y, z, t} that fails M_s axiom 4.

    Condition (ii) is tight at (x, y, z, t): 6 = 3 + 3 + 3 − 3. Axiom 4 subtracts
    the smaller self-distance 2 from each pair term instead of 3 once, so
    6 − 2 = 4 > (3 − 2) · 3. The first failing quadruple is (x, y, z, x), 4 > 2.
    """
    points = ["x", "y", "z", "t"]
    self_distance = {"x": 2, "y": 2, "z": 2, "t": 3}
    values = {}
    for key in combinations_with_replacement(points, 3):
        if key[0] == key[2]:
            values[key] = self_distance[key[0]]
        elif key == ("x", "y", "z"):
            values[key] = 6
        else:
            values[key] = 3
    return MsSpace.from_values(points, values, symmetric=True, name="hierarchy-gap")


BUILTINS: Dict[str, Callable[[], MsSpace]] = {
    "example1": paper_example,
    "discrete3": lambda: discrete_space(3),
    "two-point": two_point_space,
    "hierarchy-gap": hierarchy_gap_space,
}
