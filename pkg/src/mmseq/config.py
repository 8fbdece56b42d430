from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np

DEFAULT_TOL = {"css": 1e-15, "corr": 1e-8, "wecorr": 1e-15}


@dataclass(frozen=True)
class AccelConfig:
    """Safeguarded squared-extrapolation settings.

    ``max_backtracks = 0`` disables extrapolation: each step is then exactly
    two plain MM steps.
    """

    enabled: bool = True
    max_backtracks: int = 10
    step_floor: float = -1.0

    def __post_init__(self):
        if self.max_backtracks < 0:
            raise ValueError("max_backtracks must be >= 0")
        if self.step_floor > -1.0:
            raise ValueError("step_floor must be <= -1")


@dataclass(frozen=True)
class SolverConfig:
    """Stopping rules and run options shared by all three solvers.

    ``tol`` bounds the relative objective change between accepted iterates;
    With ``tol = 0`` the rule only fires at an exact fixed point (zero
    change), so in practice the iteration/time limits and
    ``objective_floor`` stop the run.
    """

    tol: float = 1e-15
    max_iter: int = 100_000
    time_limit_s: float | None = None
    seed: int = 0
    accel: bool = True
    trials: int = 1
    objective_floor: float | None = None
    accel_config: AccelConfig = field(default_factory=AccelConfig)

    def __post_init__(self):
        if not (self.tol >= 0 and np.isfinite(self.tol)):
            raise ValueError(f"tol must be a finite nonnegative number, got {self.tol}")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")
        if self.time_limit_s is not None and not self.time_limit_s > 0:
            raise ValueError("time_limit_s must be positive")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not (0 <= self.seed < 2**64):
            raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass
class SolverReport:
    final_objective: float
    iterations: int
    mm_map_evals: int
    wall_time_s: float
    objective_trace: list[tuple[int, float]]
    stop_reason: str
    seed: int
    lower_bound: float | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["objective_trace"] = [[int(i), float(f)] for i, f in self.objective_trace]
        return d
