"""Pluggable inner codes for concatenation.

An inner code maps a big-alphabet symbol (a k_in-bit block, handled as a
packed int) to an n_in-bit codeword and back.  Two realizations:

* RandomLinearInner: seeded random systematic binary code with exact
  maximum-likelihood (nearest-codeword) decoding; a capacity-approaching
  stand-in at desk scale.
* ProfileInner: ignores the channel entirely and fails i.i.d. with a given
  probability, emitting a uniformly wrong symbol on failure; this is the
  exact independent-failure model the concatenation exponent bound assumes.

Symbols are packed LSB-first: bit j of the int is information bit j.
"""

from __future__ import annotations

import numpy as np

from .seeding import derive_seed

MAX_ML_DIMENSION = 20  # codebook enumeration cap


def sym_to_bits(sym: int, width: int) -> np.ndarray:
    return ((sym >> np.arange(width)) & 1).astype(np.uint8)


def bits_to_sym(bits: np.ndarray) -> int:
    return int(np.dot(bits.astype(np.int64), 1 << np.arange(len(bits), dtype=np.int64)))


class RandomLinearInner:
    """Systematic random binary [n_in, k_in] code with ML decoding.

    The generator is [I | P] with P drawn from the seed, so it is always
    full rank and the symbol bits are the information bits of the codeword.
    Decoding scans the enumerated codebook (message order) for the nearest
    codeword in Hamming distance; ties go to the lowest message index.
    """

    def __init__(self, k_in: int, n_in: int, seed: int = 0):
        if not 1 <= k_in <= n_in:
            raise ValueError(f"need 1 <= k_in <= n_in, got k_in={k_in}, n_in={n_in}")
        if k_in > MAX_ML_DIMENSION:
            raise ValueError(f"k_in={k_in} exceeds the ML enumeration cap {MAX_ML_DIMENSION}")
        self.k_in = k_in
        self.n_in = n_in
        self.rate = k_in / n_in
        self.seed = seed
        self.pi = None  # no failure profile; behavior is channel-driven
        rng = np.random.default_rng(seed)
        parity = rng.integers(0, 2, size=(k_in, n_in - k_in), dtype=np.uint8)
        self.generator = np.hstack([np.eye(k_in, dtype=np.uint8), parity])
        msgs = ((np.arange(1 << k_in)[:, None] >> np.arange(k_in)[None, :]) & 1).astype(np.uint8)
        self.codebook = (msgs @ self.generator) % 2
        self.ops_per_decode = (1 << k_in) * n_in

    def encode(self, sym: int) -> np.ndarray:
        return (sym_to_bits(sym, self.k_in) @ self.generator) % 2

    def decode(self, bits: np.ndarray) -> int:
        word = np.asarray(bits, dtype=np.uint8)
        if word.shape != (self.n_in,):
            raise ValueError(f"expected {self.n_in} bits, got shape {word.shape}")
        dists = np.count_nonzero(self.codebook != word[None, :], axis=1)
        return int(np.argmin(dists))  # first minimum = lowest message index

    def clone(self, stream: int) -> "RandomLinearInner":
        return self  # stateless; safe to share


class ProfileInner:
    """Inner code with a prescribed i.i.d. failure probability.

    encode places the symbol bits systematically and zero-pads to n_in.
    decode recovers the symbol from the systematic bits, then flips a
    seeded coin: with probability pi it returns a uniformly random *wrong*
    symbol.  Each instance draws from its own sequential stream; use
    clone(trial_index) to give every Monte Carlo trial a disjoint
    reproducible stream.
    """

    def __init__(self, k_in: int, pi: float, seed: int = 0, n_in: int | None = None):
        if not 0.0 <= pi <= 1.0:
            raise ValueError(f"failure probability must be in [0,1], got {pi}")
        if n_in is None:
            n_in = k_in
        if n_in < k_in:
            raise ValueError(f"need n_in >= k_in, got {n_in} < {k_in}")
        self.k_in = k_in
        self.n_in = n_in
        self.rate = k_in / n_in
        self.pi = pi
        self.seed = seed
        self._rng = np.random.default_rng(seed)
        self.ops_per_decode = n_in

    def encode(self, sym: int) -> np.ndarray:
        bits = np.zeros(self.n_in, dtype=np.uint8)
        bits[: self.k_in] = sym_to_bits(sym, self.k_in)
        return bits

    def decode(self, bits: np.ndarray) -> int:
        word = np.asarray(bits, dtype=np.uint8)
        if word.shape != (self.n_in,):
            raise ValueError(f"expected {self.n_in} bits, got shape {word.shape}")
        sym = bits_to_sym(word[: self.k_in])
        if self._rng.random() < self.pi:
            wrong = int(self._rng.integers(0, (1 << self.k_in) - 1))
            if wrong >= sym:
                wrong += 1  # uniform over the 2^k - 1 other symbols
            return wrong
        return sym

    def reseed(self, seed: int) -> None:
        self._rng = np.random.default_rng(seed)

    def clone(self, stream: int) -> "ProfileInner":
        return ProfileInner(
            self.k_in, self.pi, seed=derive_seed(self.seed, stream), n_in=self.n_in
        )
