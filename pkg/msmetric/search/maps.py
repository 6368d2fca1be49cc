from __future__ import annotations

import logging
from itertools import product
from typing import Iterator, Optional, Set, Tuple

from ..core.types import MsSpace, PhiFunction, SelfMap
from ..fixedpoint.contraction import ContractionKind, analyze
from .config import GenConfig, trial_rng

log = logging.getLogger(__name__)

# n**n maps: 256 at n = 4
EXHAUSTIVE_MAX_POINTS = 4


def _candidate_images(space: MsSpace, config: GenConfig) -> Iterator[Tuple[str, ...]]:
    if space.n <= EXHAUSTIVE_MAX_POINTS:
        yield from product(space.points, repeat=space.n)
        return
    seen: Set[Tuple[int, ...]] = set()
    for trial in range(config.trials):
        draw = tuple(int(i) for i in trial_rng(config.seed, trial).integers(space.n, size=space.n))
        if draw in seen:
            continue
        seen.add(draw)
        yield tuple(space.points[i] for i in draw)


def iter_admissible_maps(
    space: MsSpace,
    kind: ContractionKind,
    phi: Optional[PhiFunction] = None,
    config: Optional[GenConfig] = None,
) -> Iterator[SelfMap]:
    """Yield every map admissible under `kind`.

    Spaces with at most four points are enumerated exhaustively in
    lexicographic image order; larger spaces are sampled with `config.trials`
    seeded draws (duplicates skipped).
    """
    kind = ContractionKind(kind)
    if kind is ContractionKind.PHI and phi is None:
        raise ValueError("a φ function is required for the phi contraction")
    config = config or GenConfig()
    tried = 0
    for images in _candidate_images(space, config):
        tried += 1
        T = SelfMap.from_images(space, images, name="->".join(images))
        if analyze(space, T, kind, phi).admissible:
            yield T
    log.debug("iter_admissible_maps %s/%s: %d candidates", space.name or "<space>", kind.value, tried)


def gen_admissible_map(
    space: MsSpace,
    kind: ContractionKind,
    phi: Optional[PhiFunction] = None,
    config: Optional[GenConfig] = None,
) -> Optional[SelfMap]:
    """First admissible map in enumeration order, or None."""
    return next(iter_admissible_maps(space, kind, phi, config), None)
