"""MM design of sets with low weighted auto- and cross-correlations.

Stacking the set as ``x = [x_1; ...; x_M]`` turns the weighted objective into
a quartic in ``x``. Two majorizations reduce each iteration to

    y = (R x - p o x) / (||R||_inf - lambda_B) - x,     x <- exp(j arg(-y)),

where ``R`` is block Toeplitz with blocks ``R_ij[a, b] = w_|a-b| r_ij(a-b)``
and ``p = M 1_M kron (W 1_N)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ..config import SolverConfig, SolverReport
from ..corr import (
    CorrelationTable,
    WeightProfile,
    _as_weights,
    as_sequence_set,
    correlation_table_fft,
    random_sequence_set,
    unit_phase,
    weighted_psi,
)
from ..spectral import SpectrumVector, lambda_b, lambda_w, r_infinity_norm, weight_spectrum
from ._driver import run_mm

DEGENERATE_DENOM = 1e-12


class WecorrPrecomp(NamedTuple):
    lambda_b: float
    w_spectrum: SpectrumVector
    weights: WeightProfile
    lag_mask: np.ndarray  # w_|k| laid out on the 2N-point circular lag axis
    w_rowsum: np.ndarray  # W 1_N


def wecorr_precompute(w, n: int, m: int) -> WecorrPrecomp:
    """Loop-invariant pieces: ``lambda_B`` and the spectrum of the W column."""
    w = _as_weights(w, n)
    spec = weight_spectrum(w, n)
    lb = lambda_b(lambda_w(w, n), m)
    mask = np.concatenate([w.weights, [0.0], w.weights[:0:-1]])
    ones_hat = np.fft.fft(np.ones(n), 2 * n)
    rowsum = np.fft.ifft(spec.values * ones_hat)[:n].real
    return WecorrPrecomp(lb, spec, w, mask, rowsum)


def block_rx(table: CorrelationTable, w, x) -> np.ndarray:
    """``R x`` via circulant spectra of the per-block lag vectors ``c_ij``.

    ``x`` may be given as the ``N x M`` set or as the stacked NM vector; the
    result is stacked.
    """
    n, m = table.n, table.m
    w = _as_weights(w, n)
    X = np.asarray(x, dtype=complex).reshape(m, n).T if np.ndim(x) == 1 else np.asarray(x, dtype=complex)
    # c_ij = [w_0 r_ij(0), ..., w_{N-1} r_ij(N-1), 0, w_{N-1} r_ij(1-N), ..., w_1 r_ij(-1)]
    vals = table.values * w.symmetric()
    c = np.concatenate([vals[:, :, n - 1 :], np.zeros((m, m, 1)), vals[:, :, : n - 1]], axis=-1)
    return _rx_from_c(c, X)


def _rx_from_c(c: np.ndarray, X: np.ndarray) -> np.ndarray:
    n, m = X.shape
    C = np.fft.fft(c, axis=-1)  # (M, M, 2N)
    Xh = np.fft.fft(X, 2 * n, axis=0).T  # (M, 2N)
    acc = np.einsum("ijp,jp->ip", C, Xh)
    return np.fft.ifft(acc, axis=-1)[:, :n].ravel()


def b_hadamard_x(w_spectrum: SpectrumVector, x) -> np.ndarray:
    """``(B o xx^H) x = p o x`` with ``p = M 1_M kron (W 1_N)``; stacked output."""
    X = np.asarray(x, dtype=complex)
    n, m = X.shape
    if w_spectrum.length_l != n:
        raise ValueError("weight spectrum length does not match N")
    ones_hat = np.fft.fft(np.ones(n), 2 * n)
    rowsum = np.fft.ifft(w_spectrum.values * ones_hat)[:n].real
    return (m * rowsum[:, None] * X).T.ravel()


class WecorrSurrogate(NamedTuple):
    table: CorrelationTable
    rx: np.ndarray
    r_norm: float
    px: np.ndarray
    denom: float
    y: np.ndarray | None


def wecorr_surrogate(X: np.ndarray, precomp: WecorrPrecomp) -> WecorrSurrogate:
    n, m = X.shape
    table = correlation_table_fft(X)
    rx = block_rx(table, precomp.weights, X)
    r_norm = r_infinity_norm(table, precomp.weights)
    px = (m * precomp.w_rowsum[:, None] * X).T.ravel()
    denom = r_norm - precomp.lambda_b
    if denom <= DEGENERATE_DENOM:
        return WecorrSurrogate(table, rx, r_norm, px, denom, None)
    xs = X.T.ravel()
    y = (rx - px) / denom - xs
    return WecorrSurrogate(table, rx, r_norm, px, denom, y)


def make_wecorr_map(precomp: WecorrPrecomp):
    """One-step map for a fixed weight profile (hot path, skips the table object)."""
    mask = precomp.lag_mask
    rowsum = precomp.w_rowsum
    lb = precomp.lambda_b
    w_sym = precomp.weights.symmetric()

    def mm_map(X: np.ndarray) -> np.ndarray:
        n, m = X.shape
        Xh = np.fft.fft(X, 2 * n, axis=0).T  # (M, 2N)
        r = np.fft.ifft(Xh[:, None, :] * Xh.conj()[None, :, :], axis=-1)  # r_ij(k), k mod 2N
        c = r * mask
        C = np.fft.fft(c, axis=-1)
        rx = np.fft.ifft(np.einsum("ijp,jp->ip", C, Xh), axis=-1)[:, :n]
        lagged = np.concatenate([r[:, :, n + 1 :], r[:, :, :n]], axis=-1)
        g = np.abs(lagged) * w_sym
        csum = np.concatenate([np.zeros((m, m, 1)), np.cumsum(g, axis=-1)], axis=-1)
        r_norm = np.max((csum[:, :, n:] - csum[:, :, :n]).sum(axis=1))
        denom = r_norm - lb
        if denom <= DEGENERATE_DENOM:
            return X.copy()
        xt = X.T
        y = (rx - m * rowsum[None, :] * xt) / denom - xt
        return unit_phase(-y).T

    return mm_map


@dataclass(frozen=True)
class WecorrState:
    x: np.ndarray
    table: CorrelationTable
    objective: float
    iteration: int = 0

    @property
    def stacked(self) -> np.ndarray:
        return self.x.T.ravel()

    @classmethod
    def start(cls, X, w) -> WecorrState:
        X = as_sequence_set(X)
        return cls(X, correlation_table_fft(X), weighted_psi(X, w), 0)


def wecorr_iterate(state: WecorrState, w, precomp: WecorrPrecomp | None = None) -> WecorrState:
    X = state.x
    n, m = X.shape
    precomp = precomp or wecorr_precompute(w, n, m)
    s = wecorr_surrogate(X, precomp)
    if s.y is None:
        return state
    xn = unit_phase(-s.y).reshape(m, n).T
    return WecorrState(xn, correlation_table_fft(xn), weighted_psi(xn, w), state.iteration + 1)


def design_wecorr(n: int, m: int, w, config: SolverConfig | None = None, x0=None) -> tuple[np.ndarray, SolverReport]:
    """Minimize the weighted correlation objective from a seeded random start."""
    if n < 2 or m < 1:
        raise ValueError("design_wecorr needs n >= 2 and m >= 1")
    config = config or SolverConfig()
    w = _as_weights(w, n)
    precomp = wecorr_precompute(w, n, m)
    X0 = random_sequence_set(n, m, config.seed) if x0 is None else as_sequence_set(x0, 1e-9)
    return run_mm(X0, make_wecorr_map(precomp), lambda X: weighted_psi(X, w), config)
