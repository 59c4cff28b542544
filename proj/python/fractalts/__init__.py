"""Multifractal detrended fluctuation analysis of time series."""

from ._fractalts import (
    AnalysisConfig,
    CcfResult,
    Error,
    FluctuationTable,
    HurstSpectrum,
    Profile,
    TimeSeries,
    __version__,
    align_by_date,
    analyze,
    build_profile,
    cascade,
    cascade_exact_hq,
    cross_correlation,
    detrend_fluctuation,
    fgn,
    fgn_autocovariance,
    fit_scaling,
    fluctuation_function,
    load_csv,
    pearson,
    save_csv,
    white_noise,
)

__all__ = [
    "AnalysisConfig",
    "CcfResult",
    "Error",
    "FluctuationTable",
    "HurstSpectrum",
    "Profile",
    "TimeSeries",
    "__version__",
    "align_by_date",
    "analyze",
    "build_profile",
    "cascade",
    "cascade_exact_hq",
    "cross_correlation",
    "detrend_fluctuation",
    "fgn",
    "fgn_autocovariance",
    "fit_scaling",
    "fluctuation_function",
    "load_csv",
    "pearson",
    "save_csv",
    "white_noise",
]
