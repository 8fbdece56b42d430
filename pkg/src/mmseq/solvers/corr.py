"""MM design of sets minimizing the unweighted correlation energy.

Uses the frequency-domain form of the objective,

    Psi = (1/2N) sum_p q_p^2 - N^2 M,   q_p = ||X^H h_p||^2,

with ``h_p`` the 2N-point harmonics, so one iteration costs 2M transforms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ..config import SolverConfig, SolverReport
from ..corr import as_sequence_set, psi_frequency, psi_lower_bound, random_sequence_set, unit_phase
from ..spectral import lambda_a
from ._driver import run_mm


def quartic_majorizer_coeffs(x0: float, t: float) -> tuple[float, float]:
    """Coefficients of the quadratic majorizing ``x**4`` on ``[0, t]`` at ``x0``.

    The majorizer is ``a x^2 + b x + a x0^2 - 3 x0^4``. ``x0 = t`` is allowed
    (it is the limiting case of the bound).
    """
    if x0 < 0 or t < 0:
        raise ValueError("x0 and t must be nonnegative")
    if x0 > t:
        raise ValueError("x0 must lie in [0, t]")
    a = t * t + 2.0 * x0 * t + 3.0 * x0 * x0
    b = 4.0 * x0**3 - 2.0 * a * x0
    return a, b


class CorrSurrogate(NamedTuple):
    q: np.ndarray
    t: float
    a: np.ndarray
    lambda_a: float
    Y: np.ndarray


def corr_surrogate(X: np.ndarray) -> CorrSurrogate:
    n, m = X.shape
    HX = np.fft.fft(X, 2 * n, axis=0)
    q = np.sum(HX.real**2 + HX.imag**2, axis=1)
    t = float(np.sum(q * q) ** 0.25)
    a = t * t + 2.0 * t * np.sqrt(q) + 3.0 * q
    lam = lambda_a(a, n)
    # H^H v = 2N * ifft(v)[:N]
    Y = 8.0 * n * np.fft.ifft(q[:, None] * HX, axis=0)[:n] - 2.0 * lam * X
    return CorrSurrogate(q, t, a, lam, Y)


def corr_map(X: np.ndarray) -> np.ndarray:
    return unit_phase(-corr_surrogate(X).Y)


@dataclass(frozen=True)
class CorrState:
    x: np.ndarray
    q: np.ndarray
    objective: float
    iteration: int = 0

    @classmethod
    def start(cls, X) -> CorrState:
        X = as_sequence_set(X)
        return cls._at(X, 0)

    @classmethod
    def _at(cls, X: np.ndarray, iteration: int) -> CorrState:
        n, m = X.shape
        q = np.sum(np.abs(np.fft.fft(X, 2 * n, axis=0)) ** 2, axis=1)
        return cls(X, q, float(np.sum(q * q) / (2 * n) - n * n * m), iteration)


def corr_iterate(state: CorrState) -> CorrState:
    return CorrState._at(corr_map(state.x), state.iteration + 1)


def design_corr(n: int, m: int, config: SolverConfig | None = None, x0=None) -> tuple[np.ndarray, SolverReport]:
    """Minimize Psi from a seeded random start; the report carries the lower bound."""
    if n < 2 or m < 1:
        raise ValueError("design_corr needs n >= 2 and m >= 1")
    config = config or SolverConfig(tol=1e-8)
    X0 = random_sequence_set(n, m, config.seed) if x0 is None else as_sequence_set(x0, 1e-9)
    X, report = run_mm(X0, corr_map, psi_frequency, config)
    report.lower_bound = psi_lower_bound(n, m)
    return X, report
