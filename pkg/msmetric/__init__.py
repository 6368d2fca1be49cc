"""msmetric: exact verification and search for finite M_s-metric spaces.

Typical use::

    from msmetric import paper_example, classify
    c = classify(paper_example())
    c.is_ms, c.is_partial_s      # (True, False)
"""

__version__ = "0.1.0"

from .axioms import (
    AxiomId,
    Classification,
    ValidationReport,
    Violation,
    check_ms_axiom1,
    check_ms_axiom2,
    check_ms_axiom3,
    check_ms_axiom4,
    check_partial_s,
    classify,
    replay_violation,
    validate_ms,
)
from .core import (
    BUILTINS,
    MsSpace,
    PhiFunction,
    SelfMap,
    UnknownPointError,
    discrete_space,
    hierarchy_gap_space,
    max_self,
    min_self,
    ms_value,
    paper_example,
    two_point_space,
)
from .fixedpoint import (
    ContractionKind,
    ContractionReport,
    CycleDetectedError,
    IterationLimitError,
    SolveTrace,
    TheoremCheck,
    analyze,
    banach_constant,
    enumerate_fixed_points,
    kannan_constant,
    phi_check,
    picard,
    theorem_harness,
)
from .search import (
    GenConfig,
    SeparationWitness,
    find_ms_not_partial_s,
    gen_admissible_map,
    gen_ms,
    gen_partial_s,
    iter_admissible_maps,
)
from .topology import GapProfile, ball, cauchy_profile, convergence_gaps, lemma1_check, lemma1_sweep

__all__ = [
    "__version__",
    "MsSpace",
    "SelfMap",
    "PhiFunction",
    "UnknownPointError",
    "ms_value",
    "min_self",
    "max_self",
    "paper_example",
    "discrete_space",
    "two_point_space",
    "hierarchy_gap_space",
    "BUILTINS",
    "AxiomId",
    "Violation",
    "ValidationReport",
    "Classification",
    "check_ms_axiom1",
    "check_ms_axiom2",
    "check_ms_axiom3",
    "check_ms_axiom4",
    "validate_ms",
    "check_partial_s",
    "classify",
    "replay_violation",
    "GapProfile",
    "ball",
    "convergence_gaps",
    "cauchy_profile",
    "lemma1_check",
    "lemma1_sweep",
    "ContractionKind",
    "ContractionReport",
    "SolveTrace",
    "CycleDetectedError",
    "IterationLimitError",
    "TheoremCheck",
    "banach_constant",
    "kannan_constant",
    "phi_check",
    "analyze",
    "picard",
    "enumerate_fixed_points",
    "theorem_harness",
    "GenConfig",
    "SeparationWitness",
    "gen_ms",
    "gen_partial_s",
    "find_ms_not_partial_s",
    "gen_admissible_map",
    "iter_admissible_maps",
]
