"""Memoryless binary symmetric channel."""

from __future__ import annotations

import numpy as np

from .analysis import h2


class Bsc:
    """BSC with crossover probability p in [0, 1/2).

    Each transmit call draws from its own counter-derived substream, so a
    fixed (seed, call order) pair reproduces the noise exactly.  Clone one
    instance per Monte Carlo trial (seed xor trial index) to keep parallel
    trials on disjoint reproducible streams.
    """

    def __init__(self, p: float, seed: int = 0):
        if not 0.0 <= p < 0.5:
            raise ValueError(f"crossover must satisfy 0 <= p < 1/2, got {p}")
        self.p = p
        self.seed = seed & 0xFFFFFFFFFFFFFFFF
        self._calls = 0

    def clone(self, stream: int) -> "Bsc":
        return Bsc(self.p, seed=self.seed ^ stream)

    def transmit(self, word) -> np.ndarray:
        bits = np.asarray(word, dtype=np.uint8)
        rng = np.random.default_rng([self.seed, self._calls])
        self._calls += 1
        if self.p == 0.0:
            return bits.copy()
        flips = rng.random(bits.shape) < self.p
        return bits ^ flips.astype(np.uint8)


def capacity(p: float) -> float:
    """1 - H2(p) for 0 <= p <= 1/2."""
    if not 0.0 <= p <= 0.5:
        raise ValueError(f"p must be in [0, 1/2], got {p}")
    return 1.0 - h2(p)
