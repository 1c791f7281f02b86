"""Inverse statistics of daily price series.

Thin Python veneer over the C++ core: synthetic return generators,
first-passage (inverse statistics) distributions, the window-shuffling
asymmetry pipeline and leverage correlations.  Heavy lifting happens in
``invstat._core``; everything here is re-exported verbatim.
"""

from ._core import (
    AsymmetryCurve,
    ConfigError,
    DataError,
    Error,
    FitError,
    FitResult,
    FptDistribution,
    IoError,
    LeverageCurve,
    PriceSeries,
    SignStats,
    SweepCell,
    SweepResult,
    ThetaFit,
    __version__,
    asymmetry_curve,
    brownian_fpt_pdf,
    drop_rebound_returns,
    fpt,
    gamma_scaling,
    gaussian_returns,
    leverage,
    load_csv,
    log_index,
    rng_algorithm,
    student_t_returns,
    sweep,
    tail_exponent,
    theta_fit,
    volatility,
)

__all__ = [
    "AsymmetryCurve",
    "ConfigError",
    "DataError",
    "Error",
    "FitError",
    "FitResult",
    "FptDistribution",
    "IoError",
    "LeverageCurve",
    "PriceSeries",
    "SignStats",
    "SweepCell",
    "SweepResult",
    "ThetaFit",
    "__version__",
    "asymmetry_curve",
    "brownian_fpt_pdf",
    "drop_rebound_returns",
    "fpt",
    "gamma_scaling",
    "gaussian_returns",
    "leverage",
    "load_csv",
    "log_index",
    "rng_algorithm",
    "student_t_returns",
    "sweep",
    "tail_exponent",
    "theta_fit",
    "volatility",
]
