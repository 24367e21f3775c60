"""Deterministic seed derivation for parallel Monte Carlo streams."""

from __future__ import annotations

import numpy as np

_MASK = 0xFFFFFFFFFFFFFFFF


def derive_seed(*parts: int) -> int:
    """Collapse (seed, stream, ...) into one 64-bit seed, order-sensitive."""
    entropy = [int(p) & _MASK for p in parts]
    return int(np.random.SeedSequence(entropy).generate_state(1, np.uint64)[0])
