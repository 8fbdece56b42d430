"""Circulant embedding of Toeplitz matrices and the FFT eigenvalue bounds the
solvers rely on.

Transforms follow numpy's convention: ``fft`` is the unnormalized
``F[m, n] = exp(-2j*pi*m*n / (2L))`` and ``ifft`` carries the ``1/(2L)``.
"Even"/"odd" bins refer to 0-based DFT bin indices; the two-max bounds are
symmetric in the two subsets so the labelling does not matter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .corr import CorrelationTable, WeightProfile, _as_weights


@dataclass(frozen=True)
class SpectrumVector:
    """DFT ``mu = F c`` of the length-2L first column ``c`` of a circulant."""

    values: np.ndarray
    length_l: int

    def real(self, rtol: float = 1e-8) -> np.ndarray:
        """Real part of ``mu``; refuses spectra that are not numerically real."""
        mu = self.values
        scale = max(np.max(np.abs(mu)), 1.0)
        if np.max(np.abs(mu.imag)) > rtol * scale:
            raise ValueError("spectrum is not real; source column is not conjugate-symmetric")
        return mu.real


class EigBoundPair(NamedTuple):
    lower: float
    upper: float


def circulant_spectrum(first_col, anti_col) -> SpectrumVector:
    """Spectrum of the 2L x 2L circulant embedding a Toeplitz matrix ``T``.

    Parameters
    ----------
    first_col : array_like, length L
        ``[t_0, t_-1, ..., t_{1-L}]``, the first column of ``T`` where
        ``T[a, b] = t_{b-a}``.
    anti_col : array_like, length L
        ``[0, t_{L-1}, ..., t_1]``, the wrap-around half of the circulant's
        first column. Its leading entry is ignored and treated as 0.

    Returns
    -------
    SpectrumVector
        ``mu`` such that ``T = (1/2L) F[:, :L]^H Diag(mu) F[:, :L]``.
    """
    first_col = np.asarray(first_col, dtype=complex).ravel()
    anti_col = np.asarray(anti_col, dtype=complex).ravel()
    if first_col.size != anti_col.size or first_col.size == 0:
        raise ValueError("first_col and anti_col must have the same nonzero length")
    c = np.concatenate([first_col, [0.0], anti_col[1:]])
    return SpectrumVector(np.fft.fft(c), first_col.size)


def toeplitz_spectrum(first_col, first_row) -> SpectrumVector:
    """Convenience wrapper taking the first column and first row of ``T``."""
    first_col = np.asarray(first_col, dtype=complex).ravel()
    first_row = np.asarray(first_row, dtype=complex).ravel()
    if first_col.size != first_row.size:
        raise ValueError("first column and first row lengths differ")
    anti = np.concatenate([[0.0], first_row[:0:-1]])
    return circulant_spectrum(first_col, anti)


def toeplitz_matvec(spec: SpectrumVector, v) -> np.ndarray:
    """``T v`` through one forward and one inverse 2L-point transform."""
    v = np.asarray(v, dtype=complex)
    if v.shape[0] != spec.length_l:
        raise ValueError(f"vector length {v.shape[0]} does not match L={spec.length_l}")
    n2 = 2 * spec.length_l
    mu = spec.values.reshape((n2,) + (1,) * (v.ndim - 1))
    return np.fft.ifft(mu * np.fft.fft(v, n2, axis=0), axis=0)[: spec.length_l]


def _two_max(mu: np.ndarray) -> float:
    return 0.5 * (np.max(mu[0::2]) + np.max(mu[1::2]))


def _two_min(mu: np.ndarray) -> float:
    return 0.5 * (np.min(mu[0::2]) + np.min(mu[1::2]))


def hermitian_toeplitz_eig_bounds(first_col) -> EigBoundPair:
    """Bounds on the extreme eigenvalues of a Hermitian Toeplitz matrix.

    ``first_col`` is ``[t_0, t_1, ..., t_{L-1}]`` with ``T[a, 0] = t_a``; the
    embedding column is ``[t_0, ..., t_{L-1}, 0, conj(t_{L-1}), ..., conj(t_1)]``.
    """
    t = np.asarray(first_col, dtype=complex).ravel()
    if abs(t[0].imag) > 1e-12 * max(1.0, abs(t[0])):
        raise ValueError("diagonal entry of a Hermitian Toeplitz matrix must be real")
    c = np.concatenate([t, [0.0], t[:0:-1].conj()])
    mu = SpectrumVector(np.fft.fft(c), t.size).real()
    return EigBoundPair(float(_two_min(mu)), float(_two_max(mu)))


def lambda_u_css(weighted_lags) -> float:
    """Upper bound on ``lambda_max`` of the Hermitian Toeplitz matrix whose
    circulant first column is ``weighted_lags`` (length 2L)."""
    c = np.asarray(weighted_lags, dtype=complex).ravel()
    if c.size % 2:
        raise ValueError("weighted lag vector must have even length 2L")
    mu = SpectrumVector(np.fft.fft(c), c.size // 2).real()
    return float(_two_max(mu))


def weight_column(w, n: int) -> np.ndarray:
    """``[w_0 N, w_1 (N-1), ..., w_{N-1}, 0, w_{N-1}, ..., w_1 (N-1)]``."""
    w = _as_weights(w, n).weights
    head = w * (n - np.arange(n))
    return np.concatenate([head, [0.0], head[:0:-1]])


def weight_spectrum(w, n: int) -> SpectrumVector:
    return SpectrumVector(np.fft.fft(weight_column(w, n)).astype(complex), n)


def lambda_w(w, n: int) -> float:
    """Lower bound on ``lambda_min`` of ``W[a, b] = w_|a-b| (N - |a-b|)``."""
    return float(_two_min(weight_spectrum(w, n).real()))


def lambda_b(lambda_w_val: float, m: int) -> float:
    """Lower bound on ``lambda_min(1_{MxM} kron W)`` from a bound on ``W``."""
    if m < 1:
        raise ValueError("m must be positive")
    if m == 1:
        return float(lambda_w_val)
    return float(min(m * lambda_w_val, 0.0))


def lambda_a(a, n: int) -> float:
    """``N (max over even bins + max over odd bins)`` of the 2N-vector ``a``.

    Bounds ``lambda_max(H^H Diag(a) H)``: each bin parity class holds N
    orthogonal harmonics whose outer products sum to ``N I``.
    """
    a = np.asarray(a, dtype=float).ravel()
    if a.size != 2 * n:
        raise ValueError(f"expected a vector of length {2 * n}, got {a.size}")
    return float(n * (np.max(a[0::2]) + np.max(a[1::2])))


def r_infinity_norm(table: CorrelationTable, w) -> float:
    """Max-row-sum norm of the block-Toeplitz matrix with blocks
    ``R_ij[a, b] = w_|a-b| r_ij(a - b)``.

    Row ``a`` of block ``(i, j)`` sums ``w_|d| |r_ij(d)|`` over the window
    ``d = a-N+1 .. a``, i.e. a length-N sliding window over the lag axis.
    """
    n, m = table.n, table.m
    w = _as_weights(w, n)
    g = np.abs(table.values) * w.symmetric()
    csum = np.concatenate([np.zeros((m, m, 1)), np.cumsum(g, axis=-1)], axis=-1)
    windows = csum[:, :, n:] - csum[:, :, :n]
    rows = windows.sum(axis=1)
    return float(np.max(rows))
