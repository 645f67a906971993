"""failprob: failure-probability estimation for bivariate heavy-tailed data.

Fit generalized-Pareto marginal tails, standardize observations to a common
heavy-tailed scale, and estimate the probability of an extreme
coordinatewise-increasing failure region by counting points in the inflated
transformed region -- with variance estimates, confidence intervals, a
tuning-stability scan, and an exactly solvable polar simulation model for
verification.
"""

__version__ = "0.1.0"

from .errors import (
    BadGrid,
    BadK,
    BadN,
    BadRect,
    BadTuning,
    EmptyAfterFilter,
    FailProbError,
    InvalidFailureSet,
    InvalidFit,
    InvalidMeasure,
    InvalidModel,
    InvalidSample,
    LengthMismatch,
    NonPositiveArg,
    NonPositiveGamma,
    NonPositiveTail,
    NotHalfplane,
    ParseError,
    RetentionTooSmall,
)
from .marginals import (
    GAMMA_ZERO_EPS,
    GpdTailFit,
    MarginalSample,
    fit_marginal_hill,
    hill_estimate,
    make_fit,
    u_forward,
    u_inverse,
)
from .dependence import (
    EmpiricalExponentMeasure,
    nu_hat_rectangle,
    nu_hat_set,
    standardize,
)
from .failure_sets import (
    FailureSet,
    GeneralIncreasing,
    LinearHalfplane,
    TuningParams,
    contains,
    contains_many,
    crude_ke_bound,
    inflated_contains,
)
from .estimator import (
    FailureProbabilityEstimate,
    StabilityCurve,
    confidence_interval,
    covariance_term,
    estimate_I,
    estimate_full,
    estimate_p,
    sigma_hat,
    stability_scan,
)
from .polar import (
    BetaAngle,
    OracleResult,
    PolarModel,
    UniformAngle,
    exact_margin_fits,
    monte_carlo_p,
    power_margins,
    sample_polar,
    true_nu_rectangle,
    true_p_halfplane,
)
from ._kernels import BACKEND as KERNEL_BACKEND

__all__ = [
    "__version__",
    "KERNEL_BACKEND",
    # errors
    "FailProbError",
    "InvalidSample",
    "BadK",
    "NonPositiveTail",
    "NonPositiveGamma",
    "InvalidFit",
    "NonPositiveArg",
    "LengthMismatch",
    "InvalidMeasure",
    "BadRect",
    "InvalidFailureSet",
    "NotHalfplane",
    "BadTuning",
    "BadGrid",
    "InvalidModel",
    "BadN",
    "RetentionTooSmall",
    "ParseError",
    "EmptyAfterFilter",
    # marginals
    "GAMMA_ZERO_EPS",
    "MarginalSample",
    "GpdTailFit",
    "hill_estimate",
    "fit_marginal_hill",
    "make_fit",
    "u_inverse",
    "u_forward",
    # dependence
    "standardize",
    "EmpiricalExponentMeasure",
    "nu_hat_rectangle",
    "nu_hat_set",
    # failure sets
    "LinearHalfplane",
    "GeneralIncreasing",
    "FailureSet",
    "TuningParams",
    "contains",
    "contains_many",
    "inflated_contains",
    "crude_ke_bound",
    # estimator
    "FailureProbabilityEstimate",
    "StabilityCurve",
    "estimate_p",
    "estimate_I",
    "covariance_term",
    "sigma_hat",
    "confidence_interval",
    "estimate_full",
    "stability_scan",
    # simulation oracle
    "UniformAngle",
    "BetaAngle",
    "PolarModel",
    "OracleResult",
    "sample_polar",
    "true_p_halfplane",
    "true_nu_rectangle",
    "monte_carlo_p",
    "exact_margin_fits",
    "power_margins",
]
