"""Multi-trial driver shared by the CLI: seeds ``seed + t`` for trial ``t``."""

from __future__ import annotations

import dataclasses
import time

import numpy as np

from .config import SolverConfig, SolverReport
from .corr import WeightProfile, psi_lower_bound
from .solvers import design_corr, design_css, design_wecorr

KINDS = ("css", "corr", "wecorr")


def design(kind: str, n: int, m: int, config: SolverConfig, weights: WeightProfile | None = None):
    """Run one seeded trial of the chosen solver."""
    if kind == "css":
        return design_css(n, m, config)
    if kind == "corr":
        return design_corr(n, m, config)
    if kind == "wecorr":
        if weights is None:
            raise ValueError("wecorr needs a weight profile")
        X, report = design_wecorr(n, m, weights, config)
        if np.all(weights.weights == 1.0):
            report.lower_bound = psi_lower_bound(n, m)
        return X, report
    raise ValueError(f"unknown design kind {kind!r}")


def run_trials(kind: str, n: int, m: int, config: SolverConfig, weights: WeightProfile | None = None):
    """Independent trials; returns the best set, its report, and a summary dict."""
    start = time.perf_counter()
    best: tuple[np.ndarray, SolverReport] | None = None
    finals = []
    trials = []
    for t in range(config.trials):
        cfg = dataclasses.replace(config, seed=(config.seed + t) % 2**64)
        X, rep = design(kind, n, m, cfg, weights)
        finals.append(rep.final_objective)
        trials.append({k: v for k, v in rep.to_dict().items() if k != "objective_trace"})
        if best is None or rep.final_objective < best[1].final_objective:
            best = (X, rep)
    X, rep = best
    summary = {
        "kind": kind,
        "n": n,
        "m": m,
        "config": {k: v for k, v in dataclasses.asdict(config).items() if k != "accel_config"},
        "min_objective": float(np.min(finals)),
        "avg_objective": float(np.mean(finals)),
        "lower_bound": rep.lower_bound,
        "total_wall_time_s": time.perf_counter() - start,
        "trials": trials,
        "best": rep.to_dict(),
    }
    if weights is not None:
        summary["weights"] = weights.weights.tolist()
    return X, rep, summary
