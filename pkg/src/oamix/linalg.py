"""Dense linear-algebra kernel: LU with partial pivoting, determinant,
inverse, solve, and rank detection.

Matrices are numpy float arrays (row-major, 64-bit). The elimination logic
lives here rather than delegating to a factorization library because every
downstream quantity (determinants, inverses, offending-column reports for
singular model matrices) flows through this one code path.
"""

from __future__ import annotations

import numpy as np

from .errors import SingularMatrix

# base threshold for an unscaled matrix; scaled by the largest entry so
# mg-scale information matrices are judged relative to their own magnitude
PIVOT_TOL = 1e-12


def _pivot_tol(M: np.ndarray) -> float:
    scale = float(np.max(np.abs(M))) if M.size else 0.0
    return PIVOT_TOL * max(1.0, scale)


def xtx(X: np.ndarray) -> np.ndarray:
    """X'X, symmetrized against summation-order roundoff."""
    X = np.asarray(X, dtype=float)
    M = X.T @ X
    return (M + M.T) * 0.5


def dependent_columns(M: np.ndarray, tol: float | None = None) -> tuple[int, ...]:
    """Indices of columns linearly dependent on the columns before them.

    Row-echelon elimination scanning columns left to right; a column whose
    best available pivot falls below tol contributes no new direction and is
    reported. Works on rectangular matrices.
    """
    A = np.array(M, dtype=float)
    if A.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    if tol is None:
        tol = _pivot_tol(A)
    rows, cols = A.shape
    r = 0
    dep = []
    for c in range(cols):
        if r >= rows:
            dep.append(c)
            continue
        i = r + int(np.argmax(np.abs(A[r:, c])))
        if abs(A[i, c]) < tol:
            dep.append(c)
            continue
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r + 1:, c + 1:] -= np.outer(A[r + 1:, c] / A[r, c], A[r, c + 1:])
        A[r + 1:, c] = 0.0
        r += 1
    return tuple(dep)


def rank(M: np.ndarray, tol: float | None = None) -> int:
    M = np.asarray(M, dtype=float)
    return M.shape[1] - len(dependent_columns(M, tol))


def lu_factor(M: np.ndarray) -> tuple[np.ndarray, np.ndarray, float]:
    """LU factorization with partial row pivoting.

    Returns (LU, perm, sign): LU packs the unit-lower and upper factors,
    perm is the row permutation applied, sign its parity. Raises
    SingularMatrix (with the offending columns in pivot order) when any
    pivot falls below threshold.
    """
    A = np.array(M, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("LU factorization requires a square matrix")
    p = A.shape[0]
    tol = _pivot_tol(A)
    perm = np.arange(p)
    sign = 1.0
    for k in range(p):
        i = k + int(np.argmax(np.abs(A[k:, k])))
        if abs(A[i, k]) < tol:
            dep = dependent_columns(np.asarray(M, dtype=float), tol)
            raise SingularMatrix(
                f"pivot {abs(A[i, k]):.3e} below threshold at column {k}",
                offending=dep if dep else (k,))
        if i != k:
            A[[k, i]] = A[[i, k]]
            perm[[k, i]] = perm[[i, k]]
            sign = -sign
        A[k + 1:, k] /= A[k, k]
        A[k + 1:, k + 1:] -= np.outer(A[k + 1:, k], A[k, k + 1:])
    return A, perm, sign


def _solve_factored(LU: np.ndarray, perm: np.ndarray, B: np.ndarray) -> np.ndarray:
    Y = np.array(B, dtype=float)[perm]
    p = LU.shape[0]
    for k in range(1, p):              # forward: L y = P b
        Y[k] -= LU[k, :k] @ Y[:k]
    for k in range(p - 1, -1, -1):     # back: U x = y
        Y[k] -= LU[k, k + 1:] @ Y[k + 1:]
        Y[k] /= LU[k, k]
    return Y


def lu_det_inv(M: np.ndarray) -> tuple[float, np.ndarray]:
    """Determinant (from LU pivots, signed) and inverse (column solves)."""
    LU, perm, sign = lu_factor(M)
    det = sign * float(np.prod(np.diag(LU)))
    inv = _solve_factored(LU, perm, np.eye(LU.shape[0]))
    return det, inv


def det(M: np.ndarray) -> float:
    LU, _, sign = lu_factor(M)
    return sign * float(np.prod(np.diag(LU)))


def solve(M: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve M x = b for square nonsingular M."""
    LU, perm, _ = lu_factor(M)
    return _solve_factored(LU, perm, np.asarray(b, dtype=float))
