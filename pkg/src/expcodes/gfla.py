"""Dense linear algebra over GF(2^ell): row reduction and null spaces.

Matrices are lists of row lists of ints.  Everything here is O(rows *
cols^2) table-lookup arithmetic; fine at desk scale, used once per code
construction.
"""

from __future__ import annotations

from .gf import Field


def rref(field: Field, rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    f = field
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(mat[0]) if mat else 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = f.inv(mat[r][c])
        mat[r] = [f.mul(inv, x) for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                coef = mat[i][c]
                mat[i] = [a ^ f.mul(coef, b) for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def null_space_basis(field: Field, rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Basis of {x : rows @ x = 0} over the field; one vector per free column."""
    if not rows:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    reduced, pivots = rref(field, rows)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        vec = [0] * ncols
        vec[fc] = 1
        # pivot var = -(row coefficient at the free column); char 2 drops the sign
        for row, pc in zip(reduced, pivots):
            vec[pc] = row[fc]
        basis.append(vec)
    return basis
