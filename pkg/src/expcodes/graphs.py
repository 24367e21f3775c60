"""Regular bipartite graphs with ordered incidence lists and measured spectral gap.

These stand in for explicit Ramanujan families at desk scale: the distance
and correction-radius bounds downstream depend only on the normalized second
eigenvalue gamma = lambda / delta, which is measured directly here (second
singular value of the biadjacency matrix).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SpectralInfo:
    lam: float       # second singular value of the biadjacency matrix
    gamma: float     # lam / delta
    ramanujan: bool  # lam <= 2 sqrt(delta - 1)


class BipartiteGraph:
    """A delta-regular bipartite graph on n + n vertices with N = delta*n edges.

    Edges are (a_index, b_index) pairs; incidence lists E(u) hold edge
    indices ordered by (opposite endpoint index, edge index), a fixed
    deterministic rule.  Immutable after construction.
    """

    def __init__(self, n: int, delta: int, edges: list[tuple[int, int]], seed: int | None = None):
        if len(edges) != n * delta:
            raise ValueError(f"expected {n * delta} edges, got {len(edges)}")
        self.n = n
        self.delta = delta
        self.num_edges = n * delta
        self.edges = list(edges)
        self.seed = seed

        inc_a: list[list[int]] = [[] for _ in range(n)]
        inc_b: list[list[int]] = [[] for _ in range(n)]
        for idx, (a, b) in enumerate(self.edges):
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge {idx} endpoint out of range")
            inc_a[a].append(idx)
            inc_b[b].append(idx)
        for a in range(n):
            inc_a[a].sort(key=lambda e: (self.edges[e][1], e))
        for b in range(n):
            inc_b[b].sort(key=lambda e: (self.edges[e][0], e))
        if any(len(lst) != delta for lst in inc_a + inc_b):
            raise ValueError("graph is not delta-regular")
        self.incidence_a = inc_a
        self.incidence_b = inc_b

        if not self._connected():
            raise ValueError("graph is not connected")

    def _connected(self) -> bool:
        seen_a = [False] * self.n
        seen_b = [False] * self.n
        stack = [(0, True)]
        seen_a[0] = True
        count = 1
        while stack:
            v, on_a = stack.pop()
            for e in (self.incidence_a[v] if on_a else self.incidence_b[v]):
                a, b = self.edges[e]
                w, seen = (b, seen_b) if on_a else (a, seen_a)
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append((w, not on_a))
        return count == 2 * self.n

    def biadjacency(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=float)
        for a, b in self.edges:
            m[a, b] += 1.0
        return m

    # -- edge-list text format -------------------------------------------

    def to_edge_list_text(self) -> str:
        seed = self.seed if self.seed is not None else -1
        lines = [f"{self.n} {self.delta} {seed}"]
        lines += [f"{a} {b}" for a, b in self.edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edge_list_text(cls, text: str) -> "BipartiteGraph":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        n, delta, seed = (int(tok) for tok in lines[0].split())
        edges = [tuple(int(tok) for tok in ln.split()) for ln in lines[1:]]
        return cls(n, delta, edges, seed=None if seed < 0 else seed)

    def __repr__(self) -> str:
        return f"BipartiteGraph(n={self.n}, delta={self.delta})"


def complete_bipartite(delta: int) -> BipartiteGraph:
    """K_{delta,delta}: every a-b pair joined once; second singular value 0."""
    if delta < 2:
        raise ValueError("need delta >= 2")
    edges = [(a, b) for a in range(delta) for b in range(delta)]
    return BipartiteGraph(delta, delta, edges)


def _simple_matching(rng, n: int, taken: list[set[int]], max_swaps: int = 100_000):
    """Random permutation avoiding the already-taken (a, b) pairs; repaired
    by random transpositions, which keeps the draw cheap even when the
    collision probability of a fresh permutation is tiny."""
    perm = rng.permutation(n)
    for _ in range(max_swaps):
        bad = [a for a in range(n) if int(perm[a]) in taken[a]]
        if not bad:
            return perm
        a = bad[int(rng.integers(0, len(bad)))]
        b = int(rng.integers(0, n))
        perm[a], perm[b] = perm[b], perm[a]
    return None


def random_regular_bipartite(
    n: int, delta: int, seed: int, max_attempts: int = 1000
) -> BipartiteGraph:
    """Union of delta uniformly random perfect matchings, kept simple by
    swap-repair and resampled until connected.  Deterministic given the seed."""
    if delta > n:
        raise ValueError(f"delta={delta} exceeds n={n}")
    rng = np.random.default_rng(seed)
    for _ in range(max_attempts):
        taken: list[set[int]] = [set() for _ in range(n)]
        edges: list[tuple[int, int]] = []
        for _ in range(delta):
            perm = _simple_matching(rng, n, taken)
            if perm is None:
                break
            for a in range(n):
                taken[a].add(int(perm[a]))
                edges.append((a, int(perm[a])))
        if len(edges) != n * delta:
            continue
        try:
            return BipartiteGraph(n, delta, edges, seed=seed)
        except ValueError:
            continue  # disconnected; resample
    raise RuntimeError(f"no simple connected sample after {max_attempts} attempts")


def spectral(
    graph: BipartiteGraph, tol: float = 1e-10, max_iter: int = 100_000
) -> SpectralInfo:
    """Second singular value of the biadjacency matrix by power iteration on
    M^T M with the known top singular vector (all-ones) deflated.

    For a connected delta-regular bipartite graph this equals the second
    largest adjacency eigenvalue lambda; gamma = lambda / delta.
    """
    m = graph.biadjacency()
    n = graph.n
    if n == 1:
        return SpectralInfo(0.0, 0.0, True)
    ones = np.full(n, 1.0 / np.sqrt(n))

    rng = np.random.default_rng(0)
    v = rng.standard_normal(n)
    v -= ones * (ones @ v)
    norm = np.linalg.norm(v)
    if norm == 0.0:
        v = np.zeros(n)
        v[0] = 1.0
        v -= ones * (ones @ v)
        norm = np.linalg.norm(v)
    v /= norm

    lam_sq = 0.0
    for _ in range(max_iter):
        w = m.T @ (m @ v)
        w -= ones * (ones @ w)
        norm = np.linalg.norm(w)
        if norm < tol:
            lam_sq = 0.0
            break
        w /= norm
        new_lam_sq = float(w @ (m.T @ (m @ w)))
        if abs(new_lam_sq - lam_sq) < tol:
            lam_sq = new_lam_sq
            break
        lam_sq = new_lam_sq
        v = w
    else:
        raise RuntimeError("power iteration did not converge")

    lam = float(np.sqrt(max(lam_sq, 0.0)))
    return SpectralInfo(
        lam, lam / graph.delta, bool(lam <= 2.0 * math.sqrt(graph.delta - 1) + 1e-12)
    )
