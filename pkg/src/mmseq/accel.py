"""Monotone squared extrapolation (SQUAREM-style) around an MM one-step map.

The extrapolated point is projected back onto the unit-modulus set and then
passed through one more MM step; it is accepted only if that does not do
worse than two plain steps, so the wrapped iteration stays monotone.
"""

from __future__ import annotations

from typing import Callable, NamedTuple

import numpy as np

from .config import AccelConfig
from .corr import unit_phase


class AccelStep(NamedTuple):
    x: np.ndarray
    objective: float
    mm_map_evals: int
    accepted: bool


def accel_step(
    x: np.ndarray,
    mm_map: Callable[[np.ndarray], np.ndarray],
    objective: Callable[[np.ndarray], float],
    config: AccelConfig | None = None,
) -> AccelStep:
    config = config or AccelConfig()
    x1 = mm_map(x)
    x2 = mm_map(x1)
    f2 = objective(x2)
    r = x1 - x
    v = x2 - x1 - r
    norm_v = np.linalg.norm(v)
    if norm_v == 0.0 or config.max_backtracks == 0:
        return AccelStep(x2, f2, 2, False)

    alpha = min(-np.linalg.norm(r) / norm_v, config.step_floor)
    evals = 2
    for _ in range(config.max_backtracks + 1):
        cand = mm_map(unit_phase(x - 2.0 * alpha * r + alpha * alpha * v))
        evals += 1
        f_cand = objective(cand)
        if f_cand <= f2:
            return AccelStep(cand, f_cand, evals, True)
        alpha = 0.5 * (alpha - 1.0)
    return AccelStep(x2, f2, evals, False)
