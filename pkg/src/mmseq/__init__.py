"""Unimodular sequence set design by majorization-minimization."""

from .config import AccelConfig, SolverConfig, SolverReport
from .corr import (
    CorrelationTable,
    WeightProfile,
    cisl,
    complementary_level_db,
    correlation_level_db,
    correlation_table_fft,
    cross_correlation_direct,
    psi,
    psi_lower_bound,
    weighted_psi,
)
from .solvers import design_corr, design_css, design_wecorr

__all__ = [
    "AccelConfig",
    "CorrelationTable",
    "SolverConfig",
    "SolverReport",
    "WeightProfile",
    "cisl",
    "complementary_level_db",
    "correlation_level_db",
    "correlation_table_fft",
    "cross_correlation_direct",
    "design_corr",
    "design_css",
    "design_wecorr",
    "psi",
    "psi_lower_bound",
    "weighted_psi",
]
