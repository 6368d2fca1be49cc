from .gaps import (
    SURROGATE_LABEL,
    GapProfile,
    LemmaCheck,
    LemmaSweep,
    ball,
    ball_sorted,
    cauchy_profile,
    convergence_gaps,
    lemma1_check,
    lemma1_sweep,
)

__all__ = [
    "GapProfile",
    "LemmaCheck",
    "LemmaSweep",
    "SURROGATE_LABEL",
    "ball",
    "ball_sorted",
    "convergence_gaps",
    "cauchy_profile",
    "lemma1_check",
    "lemma1_sweep",
]
