"""Exact integer linear algebra for small lattice bases.

Two independent routes:

* ``solve_unimodular`` works on Python ints, one system at a time, using only
  integer row operations (Euclidean reduction within a column, which in
  practice means pivoting straight on a +-1 entry).
* ``batched_adjugate`` runs fraction-free Gauss-Jordan elimination on a stack
  of matrices with numpy integer arrays and returns determinants and
  adjugates, so that ``M @ adj == det * I`` exactly.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

# Hadamard bound n**(n/2) for minors of {-1, 0, 1} matrices fits the dtype.
INT32_SAFE_DIM = 14
INT64_SAFE_DIM = 26


def solve_unimodular(columns: Sequence[Sequence[int]], target: Sequence[int]) -> list[int]:
    """Integer ``x`` with ``sum(x[i] * columns[i]) == target``.

    ``columns`` must form a basis of the lattice Z^n (determinant +-1).
    Raises ``ValueError`` if they do not.
    """
    n = len(target)
    if len(columns) != n or any(len(c) != n for c in columns):
        raise ValueError("need n column vectors of length n")
    # rows of the augmented system [A | b], A[i][j] = columns[j][i]
    rows = [[int(columns[j][i]) for j in range(n)] + [int(target[i])] for i in range(n)]
    for col in range(n):
        while True:
            live = [r for r in range(col, n) if rows[r][col] != 0]
            if not live:
                raise ValueError("columns are linearly dependent")
            piv = min(live, key=lambda r: (abs(rows[r][col]), r))
            rows[col], rows[piv] = rows[piv], rows[col]
            p = rows[col][col]
            done = True
            for r in range(col + 1, n):
                if rows[r][col]:
                    f = rows[r][col] // p
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
                    if rows[r][col]:
                        done = False
            if done:
                break
        if abs(rows[col][col]) != 1:
            raise ValueError("columns do not form a lattice basis")
    x = [0] * n
    for i in range(n - 1, -1, -1):
        s = rows[i][n] - sum(rows[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s * rows[i][i]  # pivot is +-1, its own inverse
    return x


def det_exact(M: Sequence[Sequence[int]]) -> int:
    """Determinant by Bareiss elimination on Python ints."""
    A = [list(map(int, row)) for row in M]
    n = len(A)
    sign, prev = 1, 1
    for k in range(n):
        piv = next((r for r in range(k, n) if A[r][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[k][k] * A[i][j] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1] if n else 1


def _work_dtype(n: int):
    if n <= INT32_SAFE_DIM:
        return np.int32
    return np.int64 if n <= INT64_SAFE_DIM else object


def batched_adjugate(M: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Determinants and adjugates of a stack of square integer matrices.

    ``M`` has shape ``(b, n, n)`` with entries in {-1, 0, 1} (wider entries
    work as long as the minors fit the working dtype). Returns ``det`` of
    shape ``(b,)`` and ``adj`` of shape ``(b, n, n)`` with
    ``M[t] @ adj[t] == det[t] * I``. Pivots prefer +-1 entries; every
    division is exact. For singular matrices ``adj`` is returned as zero
    rather than the true adjugate.
    """
    M = np.asarray(M)
    b, n, _ = M.shape
    dtype = _work_dtype(n)
    # batch axis last so every row operation is one contiguous vector op
    A = np.zeros((n, 2 * n, b), dtype=dtype)
    A[:, :n, :] = np.transpose(M, (1, 2, 0))
    for i in range(n):
        A[i, n + i, :] = 1
    prev = np.ones(b, dtype=dtype)
    sign = np.ones(b, dtype=np.int64)
    singular = np.zeros(b, dtype=bool)
    idx = np.arange(b)
    for k in range(n):
        col = A[k:, k, :]
        score = (col != 0).view(np.int8) + (np.abs(col) == 1).view(np.int8)
        r = k + np.argmax(score, axis=0)
        dead = score[r - k, idx] == 0
        singular |= dead
        swap = np.flatnonzero((r != k) & ~dead)
        if swap.size:
            rs = r[swap]
            rowk = A[k][:, swap].copy()
            A[k][:, swap] = A[rs, :, swap].T
            A[rs, :, swap] = rowk.T
            sign[swap] = -sign[swap]
        piv = A[k, k].copy()
        piv[dead] = 1
        rowk = A[k].copy()
        factor = A[:, k, :].copy()
        factor[k] = 0
        A *= piv
        A -= factor[:, None, :] * rowk[None]
        if (np.abs(prev) == 1).all():
            # dividing by +-1 is multiplying by it
            if (prev != 1).any():
                A *= prev
        else:
            A //= prev
        A[k] = rowk
        prev = piv
    det = np.where(singular, 0, sign * prev.astype(np.int64) if dtype is not object else sign * prev)
    # left block is prev * I; right block is prev * (row-permuted) inverse
    adj = np.transpose(A[:, n:, :], (2, 0, 1)).astype(np.int64 if dtype is not object else object)
    adj *= sign[:, None, None]
    adj[singular] = 0
    return det, adj
