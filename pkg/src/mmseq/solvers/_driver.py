from __future__ import annotations

import logging
import time
from typing import Callable

import numpy as np

from ..accel import accel_step
from ..config import SolverConfig, SolverReport

log = logging.getLogger(__name__)


def run_mm(
    x0: np.ndarray,
    mm_map: Callable[[np.ndarray], np.ndarray],
    objective: Callable[[np.ndarray], float],
    config: SolverConfig,
    rel_floor: float = 0.0,
) -> tuple[np.ndarray, SolverReport]:
    """Iterate an MM map (optionally accelerated) until a stopping rule fires.

    The relative change is ``|f_new - f| / max(f, rel_floor)``.
    """
    start = time.perf_counter()
    x = x0
    f = objective(x)
    trace = [(0, f)]
    evals = 0
    it = 0
    reason = "max_iter"
    floor = config.objective_floor

    if floor is not None and f <= floor:
        reason = "objective_floor"
    else:
        while it < config.max_iter:
            if config.accel:
                x_new, f_new, k, _ = accel_step(x, mm_map, objective, config.accel_config)
            else:
                x_new, k = mm_map(x), 1
                f_new = objective(x_new)
            evals += k
            it += 1
            if not np.isfinite(f_new):
                raise FloatingPointError(f"objective became non-finite at iteration {it}")
            trace.append((it, f_new))
            denom = max(abs(f), rel_floor)
            change = abs(f - f_new) / denom if denom > 0 else 0.0
            x, f = x_new, f_new
            if floor is not None and f <= floor:
                reason = "objective_floor"
                break
            if change <= config.tol:
                reason = "tol"
                break
            if config.time_limit_s is not None and time.perf_counter() - start > config.time_limit_s:
                reason = "time_limit"
                break

    elapsed = time.perf_counter() - start
    log.debug("stopped after %d iterations (%s), objective %.6g", it, reason, f)
    report = SolverReport(
        final_objective=float(f),
        iterations=it,
        mm_map_evals=evals,
        wall_time_s=elapsed,
        objective_trace=trace,
        stop_reason=reason,
        seed=config.seed,
    )
    return x, report
