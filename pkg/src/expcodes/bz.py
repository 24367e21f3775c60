"""Iterated maximum-likelihood baseline: random constituent codebooks on a
regular bipartite graph, decoded by alternating full-side ML sweeps.

The point of this construction here is its cost: every vertex decode scans
the whole 2^k codebook, so decoding cost grows as exp(degree) once the
constituent dimension scales with the degree.  Exact operation counters
(2^k * delta per ML call) feed the complexity probes that demonstrate it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .binlin import null_space_gf2, rank_gf2
from .graphs import BipartiteGraph

MAX_ML_DIMENSION = 20


class RandomCodebook:
    """Seeded random binary [delta, k] code with an enumerated codeword list.

    The generator is resampled until full rank; the codebook is enumerated
    in message order, which fixes the ML tie rule (lowest index wins).
    """

    def __init__(self, delta: int, k: int, seed: int = 0):
        if not 1 <= k <= delta:
            raise ValueError(f"need 1 <= k <= delta, got k={k}, delta={delta}")
        if k > MAX_ML_DIMENSION:
            raise ValueError(f"k={k} exceeds the enumeration cap {MAX_ML_DIMENSION}")
        self.delta = delta
        self.k = k
        self.seed = seed
        rng = np.random.default_rng(seed)
        while True:
            gen = rng.integers(0, 2, size=(k, delta), dtype=np.uint8)
            if rank_gf2(gen) == k:
                break
        self.generator = gen
        msgs = ((np.arange(1 << k)[:, None] >> np.arange(k)[None, :]) & 1).astype(np.uint8)
        self.codebook = (msgs @ gen) % 2
        self._members = {cw.tobytes() for cw in self.codebook}
        self.parity = null_space_gf2(gen)  # (delta-k) x delta, G H^T = 0
        self.ops_per_decode = (1 << k) * delta

    def ml_decode(self, word: np.ndarray) -> np.ndarray:
        """Nearest codeword in Hamming distance (first minimum wins)."""
        w = np.asarray(word, dtype=np.uint8)
        if w.shape != (self.delta,):
            raise ValueError(f"expected {self.delta} bits, got shape {w.shape}")
        dists = np.count_nonzero(self.codebook != w[None, :], axis=1)
        return self.codebook[int(np.argmin(dists))].copy()

    def contains(self, word: np.ndarray) -> bool:
        return np.asarray(word, dtype=np.uint8).tobytes() in self._members


@dataclass
class Bz2Trace:
    iterations_used: int = 0
    ml_calls: int = 0
    ops: int = 0
    success: bool = False


class Bz2Code:
    """Edge code of (graph, codebook_a, codebook_b) with alternating ML decoding."""

    def __init__(self, graph: BipartiteGraph, code_a: RandomCodebook, code_b: RandomCodebook):
        if code_a.delta != graph.delta or code_b.delta != graph.delta:
            raise ValueError("codebook lengths must equal the graph degree")
        self.graph = graph
        self.code_a = code_a
        self.code_b = code_b
        self.n = graph.n
        self.num_edges = graph.num_edges
        self._basis: np.ndarray | None = None

    def default_iterations(self) -> int:
        return 4 * math.ceil(math.log2(max(self.n, 2)))

    def contains(self, word: np.ndarray) -> bool:
        w = np.asarray(word, dtype=np.uint8)
        if w.shape != (self.num_edges,):
            return False
        for inc, code in (
            (self.graph.incidence_a, self.code_a),
            (self.graph.incidence_b, self.code_b),
        ):
            for edges in inc:
                if not code.contains(w[edges]):
                    return False
        return True

    @property
    def generator_basis(self) -> np.ndarray:
        if self._basis is None:
            rows = []
            for inc, code in (
                (self.graph.incidence_a, self.code_a),
                (self.graph.incidence_b, self.code_b),
            ):
                for edges in inc:
                    for prow in code.parity:
                        row = np.zeros(self.num_edges, dtype=np.uint8)
                        row[edges] = prow
                        rows.append(row)
            self._basis = null_space_gf2(np.array(rows, dtype=np.uint8))
        return self._basis

    @property
    def dimension(self) -> int:
        return len(self.generator_basis)

    def encode(self, message: np.ndarray) -> np.ndarray:
        msg = np.asarray(message, dtype=np.uint8)
        basis = self.generator_basis
        if msg.shape != (len(basis),):
            raise ValueError(f"message length {msg.shape} != dimension {len(basis)}")
        return (msg @ basis) % 2

    def random_codeword(self, rng) -> np.ndarray:
        msg = rng.integers(0, 2, size=self.dimension, dtype=np.uint8)
        return self.encode(msg)

    def decode(
        self, word: np.ndarray, m: int | None = None, early_stop: bool = True
    ) -> tuple[np.ndarray | None, Bz2Trace]:
        """Alternating full-side ML sweeps, left side on odd sweeps, then a
        final membership check; None signals a declared error."""
        if m is None:
            m = self.default_iterations()
        if m < 1:
            raise ValueError("need at least one sweep")
        z = np.array(word, dtype=np.uint8)
        if z.shape != (self.num_edges,):
            raise ValueError(f"expected {self.num_edges} bits, got shape {z.shape}")
        trace = Bz2Trace()
        prev_changed = True
        for i in range(1, m + 1):
            on_a = i % 2 == 1  # opposite sweep parity from the GRS-based decoder
            inc = self.graph.incidence_a if on_a else self.graph.incidence_b
            code = self.code_a if on_a else self.code_b
            changed = False
            for edges in inc:
                local = z[edges]
                out = code.ml_decode(local)
                trace.ml_calls += 1
                trace.ops += code.ops_per_decode
                if not np.array_equal(out, local):
                    changed = True
                    z[edges] = out
            trace.iterations_used = i
            if early_stop and not changed and not prev_changed:
                break
            prev_changed = changed
        if self.contains(z):
            trace.success = True
            return z, trace
        return None, trace
