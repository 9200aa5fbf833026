"""Audition support: seeded random walks over a transition matrix."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .chords import Chord
from .errors import DeadStartError, UnknownIndexError
from .idioms import TransitionMatrix

MAX_WALK_LENGTH = 1024


@dataclass(frozen=True)
class WalkConfig:
    start: int
    length: int
    seed: int

    def __post_init__(self):
        if not 1 <= self.length <= MAX_WALK_LENGTH:
            raise ValueError(f"walk length must be in [1, {MAX_WALK_LENGTH}], got {self.length}")
        # Seeds are taken mod 2**64 so any 64-bit integer is a valid seed.
        object.__setattr__(self, "seed", int(self.seed) % (1 << 64))


def sample_walk(matrix: TransitionMatrix, cfg: WalkConfig) -> list[int]:
    """Chord-index walk drawn from the matrix's row distributions.

    Fully determined by (matrix, cfg); successive chords always have
    nonzero transition probability.  The walk stops early when it enters
    an all-zero row; a dead start row raises instead.
    """
    probs = matrix.probs
    n = matrix.n
    if not 0 <= cfg.start < n:
        raise UnknownIndexError(f"start index {cfg.start} out of range for {n} chords")
    if not np.any(probs[cfg.start] > 0.0):
        raise DeadStartError(f"start row {cfg.start} has no outgoing transitions")
    rng = np.random.default_rng(cfg.seed)
    walk = [cfg.start]
    current = cfg.start
    for _ in range(cfg.length - 1):
        row = probs[current]
        total = row.sum()
        if total == 0.0:
            break
        cumulative = np.cumsum(row)
        draw = rng.random() * total
        current = min(int(np.searchsorted(cumulative, draw, side="right")), n - 1)
        walk.append(current)
    return walk


def walk_chords(chords: Sequence[Chord], matrix: TransitionMatrix,
                start: Chord, length: int, seed: int) -> list[Chord]:
    """Convenience wrapper resolving the start chord and returning chords."""
    try:
        start_index = list(chords).index(start)
    except ValueError:
        raise UnknownIndexError(f"start chord {start} is not in the matrix") from None
    indices = sample_walk(matrix, WalkConfig(start=start_index, length=length, seed=seed))
    return [chords[i] for i in indices]
