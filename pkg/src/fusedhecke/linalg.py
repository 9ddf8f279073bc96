"""Exact dense linear algebra over the rationals.

Matrices are numpy arrays with dtype=object holding `fractions.Fraction`
(or int) entries; all products, ranks and solves are exact.  The matrix
product skips zero entries, which matters because the R-matrices are very
sparse.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import InternalConsistencyError


def fmat(rows) -> np.ndarray:
    """Build an exact matrix from nested sequences."""
    a = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            a[i, j] = Fraction(v)
    return a


def zeros(r: int, c: int) -> np.ndarray:
    return np.zeros((r, c), dtype=object)


def identity(n: int) -> np.ndarray:
    return np.identity(n, dtype=object)


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact product, row oriented, skipping zero entries of the left factor."""
    n, m = a.shape
    m2, p = b.shape
    if m != m2:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    out = np.zeros((n, p), dtype=object)
    for i in range(n):
        row = a[i]
        acc = out[i]
        for j in range(m):
            v = row[j]
            if v:
                acc += v * b[j]
        out[i] = acc
    return out


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(a, b)


def mat_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and bool((a == b).all())


def first_matrix_diff(a: np.ndarray, b: np.ndarray):
    """First differing entry (i, j, a[i,j], b[i,j]) in row-major order."""
    if a.shape != b.shape:
        return (-1, -1, a.shape, b.shape)
    for i in range(a.shape[0]):
        for j in range(a.shape[1]):
            if a[i, j] != b[i, j]:
                return (i, j, a[i, j], b[i, j])
    return None


def _echelonize(aug: list, left_cols: int):
    """In-place Gauss-Jordan on the first left_cols columns; returns the list
    of pivot columns.  Pivoting picks the first nonzero entry, which is all
    exact arithmetic needs."""
    rows = len(aug)
    pivots = []
    r = 0
    for c in range(left_cols):
        pr = next((t for t in range(r, rows) if aug[t][c]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        piv = aug[r][c]
        if piv != 1:
            inv = 1 / Fraction(piv)
            aug[r] = [inv * v for v in aug[r]]
        for t in range(rows):
            if t != r and aug[t][c]:
                f = aug[t][c]
                aug[t] = [x - f * y for x, y in zip(aug[t], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def rank(a: np.ndarray) -> int:
    aug = [[Fraction(v) for v in row] for row in a]
    return len(_echelonize(aug, a.shape[1]))


def solve_exact(m: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve m @ x = b exactly for a full-column-rank m.

    Raises InternalConsistencyError if m is column-rank-deficient or if some
    column of b lies outside the column span of m.
    """
    n, d = m.shape
    nb, r = b.shape
    if n != nb:
        raise ValueError("incompatible shapes in solve_exact")
    aug = [
        [Fraction(m[i, j]) for j in range(d)] + [Fraction(b[i, j]) for j in range(r)]
        for i in range(n)
    ]
    pivots = _echelonize(aug, d)
    if len(pivots) != d:
        raise InternalConsistencyError(
            f"coefficient matrix is rank {len(pivots)} < {d}"
        )
    for t in range(d, n):
        if any(aug[t][d:]):
            raise InternalConsistencyError("right-hand side outside column span")
    x = np.zeros((d, r), dtype=object)
    for row_idx, c in enumerate(pivots):
        for j in range(r):
            x[c, j] = aug[row_idx][d + j]
    return x
