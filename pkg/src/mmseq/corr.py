"""Aperiodic auto/cross-correlations of sequence sets and the scalar metrics
built on them.

A sequence set is an ``(N, M)`` complex array whose column ``m`` is the
sequence ``x_m``. Indices ``i, j`` are 0-based throughout the library; lags
run from ``-(N-1)`` to ``N-1``.

The correlation convention is

    r_ij(k) = sum_n x_i(n + k) * conj(x_j(n)),   r_ij(-k) = conj(r_ji(k)).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

UNIMODULAR_ATOL = 1e-12
DB_FLOOR = -320.0


def as_sequence_set(X, atol: float = UNIMODULAR_ATOL) -> np.ndarray:
    """Validate and return ``X`` as a 2-D complex array of unit-modulus entries.

    A 1-D input is treated as a single sequence (``M = 1``).
    """
    X = np.asarray(X, dtype=complex)
    if X.ndim == 1:
        X = X[:, None]
    if X.ndim != 2 or X.shape[0] < 1 or X.shape[1] < 1:
        raise ValueError(f"sequence set must be a non-empty N x M array, got shape {X.shape}")
    dev = np.max(np.abs(np.abs(X) - 1.0))
    if dev > atol:
        raise ValueError(f"entries are not unimodular (max | |x| - 1 | = {dev:.3e})")
    return X


def unit_phase(v: np.ndarray) -> np.ndarray:
    """Entrywise ``exp(j*arg(v))`` with ``arg(0)`` taken as 0."""
    mag = np.abs(v)
    out = np.ones_like(v, dtype=complex)
    nz = mag > 0
    out[nz] = v[nz] / mag[nz]
    return out


def random_sequence_set(n: int, m: int, rng=None) -> np.ndarray:
    """Random-phase start: phases i.i.d. uniform on ``[0, 2*pi)``."""
    rng = np.random.default_rng(rng)
    return np.exp(2j * np.pi * rng.random((n, m)))


@dataclass(frozen=True)
class WeightProfile:
    """Nonnegative lag weights ``w_0 .. w_{N-1}``; ``w_{-k} = w_k`` is implied."""

    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float).ravel()
        if w.size < 1:
            raise ValueError("weight profile is empty")
        if not np.all(np.isfinite(w)) or np.any(w < 0):
            raise ValueError("weights must be finite and nonnegative")
        object.__setattr__(self, "weights", w)

    @property
    def n(self) -> int:
        return self.weights.size

    @classmethod
    def uniform(cls, n: int, value: float = 1.0) -> WeightProfile:
        return cls(np.full(n, float(value)))

    @classmethod
    def zcz(cls, n: int, first: int, last: int) -> WeightProfile:
        """Unit weights on lags ``first..last`` (inclusive), zero elsewhere."""
        if not (1 <= first <= last <= n - 1):
            raise ValueError(f"bad zero-correlation zone {first}:{last} for N={n}")
        w = np.zeros(n)
        w[first : last + 1] = 1.0
        return cls(w)

    def symmetric(self) -> np.ndarray:
        """Weights over lags ``-(N-1)..N-1`` in table order."""
        w = self.weights
        return np.concatenate([w[:0:-1], w])


def _as_weights(w, n: int) -> WeightProfile:
    if not isinstance(w, WeightProfile):
        w = WeightProfile(w)
    if w.n != n:
        raise ValueError(f"weight profile has length {w.n}, expected {n}")
    return w


@dataclass(frozen=True)
class CorrelationTable:
    """All ``r_ij(k)`` of a set, stored as an ``(M, M, 2N-1)`` array.

    ``values[i, j, k + N - 1]`` holds ``r_ij(k)``.
    """

    values: np.ndarray

    @property
    def m(self) -> int:
        return self.values.shape[0]

    @property
    def n(self) -> int:
        return (self.values.shape[2] + 1) // 2

    @property
    def lags(self) -> np.ndarray:
        return np.arange(1 - self.n, self.n)

    def lag(self, i: int, j: int, k: int) -> complex:
        if abs(k) >= self.n:
            raise IndexError(f"lag {k} out of range for N={self.n}")
        return self.values[i, j, k + self.n - 1]

    def pair(self, i: int, j: int) -> np.ndarray:
        return self.values[i, j]


def _check_index(i: int, m: int) -> None:
    if not (0 <= i < m):
        raise IndexError(f"sequence index {i} out of range for M={m}")


def cross_correlation_direct(X, i: int, j: int) -> np.ndarray:
    """O(N^2) reference for ``r_ij(k)``, ``k = -(N-1)..N-1``."""
    X = np.asarray(X, dtype=complex)
    if X.ndim == 1:
        X = X[:, None]
    n, m = X.shape
    _check_index(i, m)
    _check_index(j, m)
    xi, xj = X[:, i], X[:, j]
    out = np.empty(2 * n - 1, dtype=complex)
    for k in range(n):
        # vdot conjugates its first argument
        out[n - 1 + k] = np.vdot(xj[: n - k], xi[k:])
        out[n - 1 - k] = np.vdot(xi[: n - k], xj[k:]).conjugate()
    return out


def _nonneg_lags(X: np.ndarray) -> np.ndarray:
    """``r_ij(k)`` for ``k = 0..N-1`` as an ``(M, M, N)`` array via 2N-point FFTs."""
    n = X.shape[0]
    spec = np.fft.fft(X, 2 * n, axis=0)
    cross = spec[:, :, None] * spec.conj()[:, None, :]
    return np.moveaxis(np.fft.ifft(cross, axis=0)[:n], 0, -1)


def correlation_table_fft(X) -> CorrelationTable:
    """Full correlation table from zero-padded transforms.

    Negative lags are filled from ``r_ij(-k) = conj(r_ji(k))`` so the table is
    Hermitian-symmetric by construction.
    """
    X = np.asarray(X, dtype=complex)
    if X.ndim == 1:
        X = X[:, None]
    pos = _nonneg_lags(X)
    # lag 0 is shared by both halves; make it exactly Hermitian across pairs
    p0 = pos[:, :, 0]
    pos[:, :, 0] = 0.5 * (p0 + p0.conj().T)
    neg = np.conj(np.swapaxes(pos, 0, 1))[:, :, :0:-1]
    return CorrelationTable(np.concatenate([neg, pos], axis=-1))


def complementary_sum(X) -> np.ndarray:
    """``sum_m r_mm(k)`` for ``k = -(N-1)..N-1``."""
    X = np.asarray(X, dtype=complex)
    if X.ndim == 1:
        X = X[:, None]
    n = X.shape[0]
    power = np.sum(np.abs(np.fft.fft(X, 2 * n, axis=0)) ** 2, axis=1)
    r = np.fft.ifft(power)[:n]
    return np.concatenate([r[:0:-1].conj(), r])


def cisl(X) -> float:
    """Complementary integrated sidelobe level ``sum_{k>=1} |sum_m r_mm(k)|^2``."""
    s = complementary_sum(X)
    n = (s.size + 1) // 2
    return float(np.sum(np.abs(s[n:]) ** 2))


def psi(X) -> float:
    """Auto-sidelobe plus cross-correlation energy of a unimodular set.

    The in-phase autocorrelations are excluded rather than subtracted as
    ``N^2 M``, which avoids cancellation.
    """
    return weighted_psi(X, None)


def weighted_psi(X, w=None) -> float:
    """``sum_{i,j,k} w_|k| |r_ij(k)|^2 - w_0 N^2 M`` for unimodular ``X``.

    ``w=None`` means unit weights. Since ``r_mm(0) = N`` under the unit-modulus
    constraint, the subtracted constant is dropped together with the in-phase
    autocorrelation terms.
    """
    table = correlation_table_fft(X)
    n, m = table.n, table.m
    energy = np.abs(table.values) ** 2
    energy[np.arange(m), np.arange(m), n - 1] = 0.0
    if w is None:
        return float(energy.sum())
    w = _as_weights(w, n)
    return float(np.sum(energy * w.symmetric()))


def psi_frequency(X) -> float:
    """``(1/2N) sum_p ||X^H h_p||^4 - N^2 M`` over the 2N harmonic bins."""
    X = np.asarray(X, dtype=complex)
    if X.ndim == 1:
        X = X[:, None]
    n, m = X.shape
    q = np.sum(np.abs(np.fft.fft(X, 2 * n, axis=0)) ** 2, axis=1)
    return float(np.sum(q * q) / (2 * n) - n * n * m)


def psi_lower_bound(n: int, m: int) -> float:
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    return float(n * n * m * (m - 1))


def _to_db(ratio: np.ndarray) -> np.ndarray:
    ratio = np.asarray(ratio, dtype=float)
    with np.errstate(divide="ignore"):
        db = 20.0 * np.log10(np.maximum(ratio, 10.0 ** (DB_FLOOR / 20.0)))
    return np.maximum(db, DB_FLOOR)


def complementary_level_db(X) -> np.ndarray:
    """Normalized autocorrelation sum in dB over lags ``-(N-1)..N-1``.

    Values below the -320 dB floor (including exact zeros) are clamped to it.
    """
    s = complementary_sum(X)
    n = (s.size + 1) // 2
    level = _to_db(np.abs(s) / s[n - 1].real)
    level[n - 1] = 0.0
    return level


def correlation_level_db(X, i: int, j: int) -> np.ndarray:
    """``20 log10(|r_ij(k)| / N)`` with the same -320 dB floor."""
    X = np.asarray(X, dtype=complex)
    if X.ndim == 1:
        X = X[:, None]
    n, m = X.shape
    _check_index(i, m)
    _check_index(j, m)
    r = correlation_table_fft(X).pair(i, j)
    return _to_db(np.abs(r) / n)


def peak_sidelobe_db(X) -> np.ndarray:
    """Per-sequence peak autocorrelation sidelobe (dB re. N); -320 for N = 1."""
    X = np.asarray(X, dtype=complex)
    if X.ndim == 1:
        X = X[:, None]
    n, m = X.shape
    if n == 1:
        return np.full(m, DB_FLOOR)
    table = correlation_table_fft(X)
    diag = table.values[np.arange(m), np.arange(m), n:]
    return _to_db(np.max(np.abs(diag), axis=1) / n)
