"""Seeded instance generation and counterexample search."""

from .config import DEFAULT_GRID, GenConfig, run_trials, trial_rng
from .generate import SeparationWitness, find_ms_not_partial_s, gen_ms, gen_partial_s
from .maps import EXHAUSTIVE_MAX_POINTS, gen_admissible_map, iter_admissible_maps

__all__ = [
    "DEFAULT_GRID",
    "GenConfig",
    "trial_rng",
    "run_trials",
    "SeparationWitness",
    "gen_ms",
    "gen_partial_s",
    "find_ms_not_partial_s",
    "EXHAUSTIVE_MAX_POINTS",
    "iter_admissible_maps",
    "gen_admissible_map",
]
