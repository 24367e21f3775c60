"""GF(2) matrix helpers on numpy uint8 arrays."""

from __future__ import annotations

import numpy as np


def rank_gf2(mat: np.ndarray) -> int:
    m = np.array(mat, dtype=np.uint8) & 1
    rank = 0
    rows, cols = m.shape
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r, c]), None)
        if pivot is None:
            continue
        m[[rank, pivot]] = m[[pivot, rank]]
        hits = np.nonzero(m[:, c])[0]
        for r in hits:
            if r != rank:
                m[r] ^= m[rank]
        rank += 1
        if rank == rows:
            break
    return rank


def null_space_gf2(mat: np.ndarray) -> np.ndarray:
    """Basis of the right null space, one row per free column."""
    m = np.array(mat, dtype=np.uint8) & 1
    rows, cols = m.shape
    pivots: list[int] = []
    rank = 0
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r, c]), None)
        if pivot is None:
            continue
        m[[rank, pivot]] = m[[pivot, rank]]
        for r in np.nonzero(m[:, c])[0]:
            if r != rank:
                m[r] ^= m[rank]
        pivots.append(c)
        rank += 1
        if rank == rows:
            break
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for row, pc in zip(m[:rank], pivots):
            basis[i, pc] = row[fc]
    return basis
