"""Exact linear algebra over a Field, vectorised with numpy.

Matrices are 2-D int64 arrays of field encodings.  Row reduction, null
spaces and membership tests all go through the field's table-backed vector
operations, so the same code path serves prime fields and small extension
fields.
"""

from __future__ import annotations

import numpy as np

from .gf import Field


def rref(f: Field, mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns (R, pivot_columns).

    Zero rows are kept at the bottom of R; the nonzero rows are the canonical
    basis of the row space (unique per subspace).
    """
    R = np.array(mat, dtype=np.int64)
    if R.size == 0:
        return R, []
    nrows, ncols = R.shape
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        nz = np.nonzero(R[row:, col])[0]
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            R[[row, piv]] = R[[piv, row]]
        inv = f.inv(int(R[row, col]))
        if inv != 1:
            R[row] = f.vmul(R[row], np.int64(inv))
        coef = R[:, col].copy()
        coef[row] = 0
        mask = coef != 0
        if mask.any():
            R[mask] = f.vsub(R[mask], f.vmul(coef[mask, None], R[row][None, :]))
        pivots.append(col)
        row += 1
    return R, pivots


def row_space(f: Field, mat: np.ndarray) -> np.ndarray:
    R, pivots = rref(f, mat)
    return R[: len(pivots)]


def rank(f: Field, mat: np.ndarray) -> int:
    return len(rref(f, mat)[1])


def nullspace(f: Field, mat: np.ndarray) -> np.ndarray:
    """Canonical basis of {v : mat @ v = 0}, one row per basis vector."""
    mat = np.asarray(mat, dtype=np.int64)
    ncols = mat.shape[1] if mat.ndim == 2 else len(mat)
    R, pivots = rref(f, mat)
    free = [c for c in range(ncols) if c not in pivots]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for r, pc in enumerate(pivots):
            basis[k, pc] = f.neg(int(R[r, fc]))
    return row_space(f, basis) if len(free) else basis


def reduce_vector(f: Field, R: np.ndarray, pivots, v: np.ndarray) -> np.ndarray:
    """Residual of v after elimination against RREF rows R."""
    v = np.array(v, dtype=np.int64)
    for r, pc in enumerate(pivots):
        c = int(v[pc])
        if c:
            v = f.vsub(v, f.vmul(np.int64(c), R[r]))
    return v


def in_row_space(f: Field, R: np.ndarray, pivots, v) -> bool:
    return not reduce_vector(f, R, pivots, v).any()


def matmul(f: Field, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Exact A @ B over the field."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if f.m == 1:
        # entries < p <= 2^20 and desk-scale shapes keep int64 exact
        return (A @ B) % f.p
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for k in range(A.shape[1]):
        out = f.vadd(out, f.vmul(A[:, k, None], B[None, k, :].reshape(1, -1)))
    return out


def solve(f: Field, A: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """One solution x of A x = b, or None when inconsistent."""
    A = np.asarray(A, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64).reshape(-1, 1)
    aug = np.concatenate([A, b], axis=1)
    R, pivots = rref(f, aug)
    ncols = A.shape[1]
    if ncols in pivots:
        return None
    x = np.zeros(ncols, dtype=np.int64)
    for r, pc in enumerate(pivots):
        x[pc] = R[r, ncols]
    return x
