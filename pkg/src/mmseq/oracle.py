"""Dense brute-force constructions for verifying the FFT paths at small sizes.

Nothing here is used by the solvers. Every builder has a hard size guard.
Vectorization is column-major (``vec`` stacks columns), matching
``X.ravel(order="F")``.
"""

from __future__ import annotations

import numpy as np

from .corr import CorrelationTable, _as_weights


def _guard(size: int, limit: int, what: str) -> None:
    if size > limit:
        raise ValueError(f"{what} too large for a dense build ({size} > {limit})")


def vec(A: np.ndarray) -> np.ndarray:
    return np.asarray(A).ravel(order="F")


def dense_shift_matrix(l: int, k: int) -> np.ndarray:
    """``U_k``: ones where ``col - row = k``."""
    if abs(k) >= l:
        raise ValueError(f"|k| must be < {l}, got {k}")
    return np.eye(l, k=k)


def selection_matrix(n: int, m: int, idx: int) -> np.ndarray:
    """``S_idx = [0, I_N, 0]`` picking sequence ``idx`` out of the stacked vector."""
    S = np.zeros((n, n * m))
    S[:, idx * n : (idx + 1) * n] = np.eye(n)
    return S


def dense_toeplitz(first_col, first_row) -> np.ndarray:
    first_col = np.asarray(first_col)
    first_row = np.asarray(first_row)
    n = first_col.size
    d = np.arange(n)[:, None] - np.arange(n)[None, :]
    vals = np.concatenate([first_row[:0:-1], first_col])
    return vals[d + n - 1]


def dense_L_matrix(w, n: int, m: int) -> np.ndarray:
    """``sum_{i,j,k} w_k vec(S_j^H U_k S_i) vec(S_j^H U_k S_i)^H`` (real, (NM)^2 square)."""
    nm = n * m
    _guard(nm, 64, "NM")
    w = _as_weights(w, n).weights
    L = np.zeros((nm * nm, nm * nm))
    for i in range(m):
        for j in range(m):
            for k in range(1 - n, n):
                wk = w[abs(k)]
                if wk == 0:
                    continue
                # S_j^H U_k S_i has block (j, i) equal to U_k: ones at (j*n + a, i*n + a + k)
                a = np.arange(max(0, -k), min(n, n - k))
                rows = j * n + a
                cols = i * n + a + k
                idx = cols * nm + rows
                L[np.ix_(idx, idx)] += wk
    return L


def dense_W_matrix(w, n: int) -> np.ndarray:
    w = _as_weights(w, n).weights
    d = np.abs(np.arange(n)[:, None] - np.arange(n)[None, :])
    return w[d] * (n - d)


def dense_B_matrix(w, n: int, m: int) -> np.ndarray:
    """``1_{MxM} kron W`` with ``W[a, b] = w_|a-b| (N - |a-b|)``."""
    _guard(n * m, 128, "NM")
    return np.kron(np.ones((m, m)), dense_W_matrix(w, n))


def dense_R_matrix(table: CorrelationTable, w) -> np.ndarray:
    """Block matrix with Toeplitz blocks ``R_ij = sum_k w_k r_ij(-k) U_k``."""
    n, m = table.n, table.m
    _guard(n * m, 256, "NM")
    ws = _as_weights(w, n).symmetric()
    d = np.arange(n)[:, None] - np.arange(n)[None, :]  # a - b
    R = np.zeros((n * m, n * m), dtype=complex)
    for i in range(m):
        for j in range(m):
            # R_ij[a, b] = w_|b-a| r_ij(a - b)
            R[i * n : (i + 1) * n, j * n : (j + 1) * n] = (ws * table.values[i, j])[d + n - 1]
    return R


def dense_harmonic_matrix(n: int) -> np.ndarray:
    """``H = F[:, :N]``: 2N x N with row p equal to ``h_p^H``."""
    _guard(n, 256, "N")
    p = np.arange(2 * n)[:, None]
    return np.exp(-2j * np.pi * p * np.arange(n)[None, :] / (2 * n))


def dense_css_R(z: np.ndarray, n: int) -> np.ndarray:
    """``R = sum_{1<=|k|<=N-1} r_z(-k) U_k`` for the packed CSS sequence ``z``."""
    l = z.size
    _guard(l, 512, "L")
    R = np.zeros((l, l), dtype=complex)
    for k in range(1, n):
        rk = np.vdot(z[: l - k], z[k:])  # r_z(k)
        R += np.conj(rk) * dense_shift_matrix(l, k) + rk * dense_shift_matrix(l, -k)
    return R


def quadratic_majorizer(L: np.ndarray, M: np.ndarray, x: np.ndarray, x0: np.ndarray) -> float:
    """Value at ``x`` of the quadratic majorizer of ``x^H L x`` built at ``x0`` with ``M >= L``."""
    val = np.vdot(x, M @ x) + 2 * np.vdot(x, (L - M) @ x0).real + np.vdot(x0, (M - L) @ x0)
    return float(val.real)
