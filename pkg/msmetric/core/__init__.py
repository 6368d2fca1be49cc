from .instances import BUILTINS, discrete_space, hierarchy_gap_space, paper_example, two_point_space
from .ops import max_self, min_self, ms_value, pair_gap, pair_spread
from .types import (
    MAX_POINTS,
    MsSpace,
    PhiFunction,
    SelfMap,
    UnknownPointError,
    format_value,
    parse_value,
)

__all__ = [
    "MAX_POINTS",
    "MsSpace",
    "SelfMap",
    "PhiFunction",
    "UnknownPointError",
    "parse_value",
    "format_value",
    "ms_value",
    "min_self",
    "max_self",
    "pair_gap",
    "pair_spread",
    "paper_example",
    "discrete_space",
    "two_point_space",
    "hierarchy_gap_space",
    "BUILTINS",
]
