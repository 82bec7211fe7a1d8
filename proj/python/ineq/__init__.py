"""Inequality indices, analytic Lorenz families, kinetic exchange models,
and heavy-tail fitting, backed by the C++ core."""

from ._core import (
    IndexReport,
    LinearFit,
    LognormalFit,
    LogHistogram,
    LorenzCurve,
    LorenzPoint,
    NumericError,
    PowerLawTailFit,
    RescaledSample,
    SimulationSchedule,
    SteadyStateSample,
    GKRecord,
    ValidationError,
    build_lorenz,
    cc_trade,
    ccm_trade,
    collapse_distance,
    fit_gk_line,
    fit_lognormal,
    fit_powerlaw_at,
    fit_powerlaw_tail,
    gini,
    gk_circle_arc,
    gk_exponential,
    gk_lognormal,
    gk_power,
    indices_report,
    kolkata,
    log_binned_histogram,
    rescale_by_mean,
    run_cc,
    run_ccm,
    run_quenched,
    sample_saving,
    sweep_delta,
    sweep_lambda,
)

__version__ = "0.1.0"

__all__ = [
    "IndexReport",
    "LinearFit",
    "LognormalFit",
    "LogHistogram",
    "LorenzCurve",
    "LorenzPoint",
    "NumericError",
    "PowerLawTailFit",
    "RescaledSample",
    "SimulationSchedule",
    "SteadyStateSample",
    "GKRecord",
    "ValidationError",
    "build_lorenz",
    "cc_trade",
    "ccm_trade",
    "collapse_distance",
    "fit_gk_line",
    "fit_lognormal",
    "fit_powerlaw_at",
    "fit_powerlaw_tail",
    "gini",
    "gk_circle_arc",
    "gk_exponential",
    "gk_lognormal",
    "gk_power",
    "indices_report",
    "kolkata",
    "log_binned_histogram",
    "rescale_by_mean",
    "run_cc",
    "run_ccm",
    "run_quenched",
    "sample_saving",
    "sweep_delta",
    "sweep_lambda",
    "__version__",
]
