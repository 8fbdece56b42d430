"""MM design of (near-)complementary sets.

The set is packed into one zero-padded sequence
``z = [x_1; 0_{N-1}; ...; x_M; 0_{N-1}]`` of length ``L = M(2N-1)``. Its lags
``1..N-1`` equal the summed autocorrelations of the set, so the CISL is a
weighted ISL of ``z`` and each iteration is a single phase projection.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ..config import SolverConfig, SolverReport
from ..corr import as_sequence_set, cisl, random_sequence_set, unit_phase
from ..spectral import lambda_u_css
from ._driver import run_mm


def embed(X: np.ndarray) -> np.ndarray:
    """Zero-padded concatenation ``z`` of the columns of ``X``."""
    n, m = X.shape
    Z = np.zeros((m, 2 * n - 1), dtype=complex)
    Z[:, :n] = X.T
    return Z.ravel()


def extract(z: np.ndarray, n: int, m: int) -> np.ndarray:
    return z.reshape(m, 2 * n - 1)[:, :n].T


class CssSurrogate(NamedTuple):
    z: np.ndarray
    r: np.ndarray  # ifft(|F z|^2): r_z(k) at index k, r_z(-k) at 2L - k
    c: np.ndarray
    mu: np.ndarray
    lambda_u: float
    y: np.ndarray


def css_surrogate(X: np.ndarray) -> CssSurrogate:
    """Quantities of one MM-CSS step evaluated at ``X``."""
    n, m = X.shape
    L = m * (2 * n - 1)
    z = embed(X)
    f = np.fft.fft(z, 2 * L)
    r = np.fft.ifft(f.real**2 + f.imag**2)
    c = np.zeros(2 * L, dtype=complex)
    c[1:n] = r[1:n]
    c[2 * L - n + 1 :] = r[2 * L - n + 1 :]
    mu = np.fft.fft(c)
    lam = lambda_u_css(c) if n > 1 else 0.0
    rz = np.fft.ifft(mu * f)[:L]
    y = ((L - 1) * m * n + lam) * z - rz
    return CssSurrogate(z, r, c, mu, lam, y)


def css_map(X: np.ndarray) -> np.ndarray:
    n, m = X.shape
    if n == 1:
        return X.copy()
    return unit_phase(extract(css_surrogate(X).y, n, m))


@dataclass(frozen=True)
class CssState:
    x: np.ndarray
    z: np.ndarray
    objective: float
    iteration: int = 0

    @classmethod
    def start(cls, X) -> CssState:
        X = as_sequence_set(X)
        return cls(X, embed(X), cisl(X), 0)


def css_iterate(state: CssState) -> CssState:
    x = css_map(state.x)
    return CssState(x, embed(x), cisl(x), state.iteration + 1)


def design_css(n: int, m: int, config: SolverConfig | None = None, x0=None) -> tuple[np.ndarray, SolverReport]:
    """Minimize the CISL of an ``N x M`` unimodular set from a seeded random start."""
    if n < 2 or m < 1:
        raise ValueError("design_css needs n >= 2 and m >= 1")
    config = config or SolverConfig()
    X0 = random_sequence_set(n, m, config.seed) if x0 is None else as_sequence_set(x0, 1e-9)
    return run_mm(X0, css_map, cisl, config, rel_floor=1.0)
