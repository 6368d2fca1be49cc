from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import partial
from typing import Callable, Optional, Sequence, Tuple, TypeVar

import numpy as np
from tqdm import tqdm

from ..core.types import ValueLike, parse_value

log = logging.getLogger(__name__)

DEFAULT_GRID: Tuple[Fraction, ...] = tuple(Fraction(i, 2) for i in range(21))
MIN_POINTS = 2
MAX_GEN_POINTS = 16
SEED_MODULUS = 2**64

R = TypeVar("R")


@dataclass(frozen=True)
class GenConfig:
    """Seeded generation settings.

    Every trial draws from its own stream (see `trial_rng`), so a trial's
    outcome depends only on (seed, trial index) and never on `workers`.
    """

    n: int = 3
    seed: int = 0
    value_grid: Tuple[Fraction, ...] = DEFAULT_GRID
    max_repair_rounds: int = 50
    trials: int = 1000
    workers: int = 1
    progress: bool = field(default=False, compare=False)

    def __post_init__(self):
        if not (MIN_POINTS <= self.n <= MAX_GEN_POINTS):
            raise ValueError(f"n must be in {MIN_POINTS}..{MAX_GEN_POINTS}, got {self.n}")
        if not (0 <= self.seed < SEED_MODULUS):
            raise ValueError("seed must be a 64-bit unsigned integer")
        grid = tuple(sorted({parse_value(v) for v in self.value_grid}))
        if not grid:
            raise ValueError("value_grid must be non-empty")
        object.__setattr__(self, "value_grid", grid)
        if self.max_repair_rounds < 0:
            raise ValueError("max_repair_rounds must be non-negative")
        if self.trials < 0:
            raise ValueError("trials must be non-negative")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")

    @classmethod
    def with_grid(cls, values: Sequence[ValueLike], **kwargs) -> "GenConfig":
        return cls(value_grid=tuple(parse_value(v) for v in values), **kwargs)

    @property
    def ceiling(self) -> Fraction:
        return self.value_grid[-1]

    def replace(self, **changes) -> "GenConfig":
        return replace(self, **changes)


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """PCG64 stream for one trial, seeded with (seed + trial) mod 2**64."""
    return np.random.Generator(np.random.PCG64((seed + trial) % SEED_MODULUS))


def run_trials(
    config: GenConfig, trial_fn: Callable[[GenConfig, int], Optional[R]], desc: str = "trials"
) -> Optional[Tuple[int, R]]:
    """Run trials 0..trials-1 and return (index, result) of the lowest-index success.

    `trial_fn` must be a module-level function when `config.workers > 1`.
    """
    if config.trials == 0:
        return None
    bar = tqdm(total=config.trials, desc=desc, disable=not config.progress, leave=False)
    try:
        if config.workers == 1:
            for trial in range(config.trials):
                result = trial_fn(config, trial)
                bar.update(1)
                if result is not None:
                    return trial, result
            return None

        batch = config.workers * 8
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            for start in range(0, config.trials, batch):
                indices = range(start, min(start + batch, config.trials))
                # map() yields in submission order
                for trial, result in zip(indices, pool.map(partial(trial_fn, config), indices)):
                    bar.update(1)
                    if result is not None:
                        log.debug("%s: success at trial %d", desc, trial)
                        return trial, result
        return None
    finally:
        bar.close()
