"""Failure-probability estimation by counting in the inflated transformed set.

Pipeline: standardize the raw pairs per coordinate, inflate the transformed
failure set by ``n/ke``, count the standardized points inside and divide by
``ke``.  The same counts with one coordinate stretched by ``1 -/+ ell`` give
the boundary-mass estimates ``i_hat_1, i_hat_2`` feeding the variance; a
joint upper-rectangle count gives the covariance term; together they yield a
normal confidence interval with halfwidth ``sqrt(1/ke)*log(ke/n)*sigma*z``.

Everything here depends on the tuning pair ``(k, e)`` only through the
product ``ke``, which is the single number exposed in the API.  The
stability scan evaluates the full estimate on a grid of ``ke`` values so a
plateau can be picked by eye or rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isinf, isnan, log, sqrt

import numpy as np
from scipy.special import ndtri

from .errors import BadGrid, BadTuning, LengthMismatch
from .dependence import standardize
from .failure_sets import (
    FailureSet,
    LinearHalfplane,
    TuningParams,
    contains_many,
)
from .marginals import GpdTailFit, _u_forward_total
from . import _kernels

__all__ = [
    "FailureProbabilityEstimate",
    "StabilityCurve",
    "estimate_p",
    "estimate_I",
    "covariance_term",
    "sigma_hat",
    "confidence_interval",
    "estimate_full",
    "stability_scan",
]


@dataclass(frozen=True)
class FailureProbabilityEstimate:
    """Point estimate with variance building blocks and confidence bounds."""

    p_hat: float
    sigma_hat: float
    ci_lower: float
    ci_upper: float
    ke: float
    n: int
    count_in_inflated: int
    i_hat_1: float
    i_hat_2: float
    cov_term: float

    def diagnostics(self) -> tuple[str, ...]:
        """Stability warnings derivable from the fields."""
        notes = []
        if self.i_hat_1 < 0:
            notes.append(
                "i_hat_1 is negative (finite-sample noise); floored to 0 in the variance cross term"
            )
        if self.i_hat_2 < 0:
            notes.append(
                "i_hat_2 is negative (finite-sample noise); floored to 0 in the variance cross term"
            )
        if self.i_hat_1 < 0 and self.i_hat_2 < 0:
            notes.append(
                "unstable: both boundary-mass estimates negative, sigma_hat reported as 0"
            )
        return tuple(notes)


@dataclass(frozen=True)
class StabilityCurve:
    """Estimates along a strictly increasing ke grid."""

    rows: tuple[tuple[float, FailureProbabilityEstimate], ...]

    def __post_init__(self):
        kes = [ke for ke, _ in self.rows]
        if any(b <= a for a, b in zip(kes, kes[1:])):
            raise BadGrid("stability-curve rows must have strictly increasing ke")

    @property
    def kes(self) -> tuple[float, ...]:
        return tuple(ke for ke, _ in self.rows)

    @property
    def estimates(self) -> tuple[FailureProbabilityEstimate, ...]:
        return tuple(est for _, est in self.rows)

    def __len__(self) -> int:
        return len(self.rows)


def _point_columns(points) -> tuple[np.ndarray, np.ndarray]:
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise LengthMismatch(f"points must have shape (n, 2), got {pts.shape}")
    return np.ascontiguousarray(pts[:, 0]), np.ascontiguousarray(pts[:, 1])


def _count_inflated(
    z1: np.ndarray,
    z2: np.ndarray,
    failure_set: FailureSet,
    fit1: GpdTailFit,
    fit2: GpdTailFit,
    n: int,
    ke: float,
    stretch1: float = 1.0,
    stretch2: float = 1.0,
) -> int:
    if not ke > 0:
        raise BadTuning(f"ke must be positive, got {ke!r}")
    if not (stretch1 > 0 and stretch2 > 0):
        raise BadTuning(f"stretches must be positive, got ({stretch1!r}, {stretch2!r})")
    scale = ke / n
    if isinstance(failure_set, LinearHalfplane):
        return _kernels.count_halfplane(
            z1,
            z2,
            scale,
            stretch1,
            stretch2,
            fit1,
            fit2,
            failure_set.alpha1,
            failure_set.alpha2,
            failure_set.retention,
        )
    x = _u_forward_total(fit1, (scale * z1) / stretch1)
    y = _u_forward_total(fit2, (scale * z2) / stretch2)
    return int(np.count_nonzero(contains_many(failure_set, x, y)))


def _check_points_n(z1: np.ndarray, n: int) -> None:
    if len(z1) != n:
        raise LengthMismatch(f"points has length {len(z1)} but n={n}")


def estimate_p(points, failure_set: FailureSet, fits, n: int, ke: float) -> float:
    """Point estimate: count in the inflated transformed set over ke."""
    z1, z2 = _point_columns(points)
    _check_points_n(z1, n)
    fit1, fit2 = fits
    return _count_inflated(z1, z2, failure_set, fit1, fit2, n, ke) / ke


def estimate_I(
    points,
    failure_set: FailureSet,
    fits,
    n: int,
    ke: float,
    ell: float,
    coordinate: int,
) -> float:
    """Boundary-mass estimate on the given coordinate (1 or 2).

    Difference of counts with that coordinate stretched by ``1 - ell`` and
    ``1 + ell``, over ``2*ell*ke``.  Nonnegative in expectation but may come
    out negative from noise; reported raw.
    """
    if not 0 < ell < 0.5:
        raise BadTuning(f"ell must lie in (0, 0.5), got {ell!r}")
    if coordinate not in (1, 2):
        raise BadTuning(f"coordinate must be 1 or 2, got {coordinate!r}")
    z1, z2 = _point_columns(points)
    _check_points_n(z1, n)
    fit1, fit2 = fits
    if coordinate == 1:
        lo = _count_inflated(z1, z2, failure_set, fit1, fit2, n, ke, 1.0 - ell, 1.0)
        hi = _count_inflated(z1, z2, failure_set, fit1, fit2, n, ke, 1.0 + ell, 1.0)
    else:
        lo = _count_inflated(z1, z2, failure_set, fit1, fit2, n, ke, 1.0, 1.0 - ell)
        hi = _count_inflated(z1, z2, failure_set, fit1, fit2, n, ke, 1.0, 1.0 + ell)
    return (lo - hi) / (2.0 * ell * ke)


def covariance_term(points, fits, n: int, ke: float, lam: float) -> float:
    """Estimate of the covariance factor between the two tail-index errors.

    ``ke/(lam*k1*k2)`` times the number of standardized points exceeding
    ``n/(lam*k1)`` and ``n/(lam*k2)`` jointly.  ``lam`` in (0, 1] keeps the
    thresholds inside the validated range of the fitted tails.
    """
    if not ke > 0:
        raise BadTuning(f"ke must be positive, got {ke!r}")
    if not 0 < lam <= 1:
        raise BadTuning(f"lambda must lie in (0, 1], got {lam!r}")
    z1, z2 = _point_columns(points)
    _check_points_n(z1, n)
    fit1, fit2 = fits
    k1, k2 = fit1.k_i, fit2.k_i
    count = _kernels.count_rectangle(z1, z2, n / (lam * k1), n / (lam * k2))
    return ke / (lam * k1 * k2) * count


def sigma_hat(i1: float, i2: float, cov: float, ke: float, k1, k2) -> float:
    """Asymptotic standard deviation of the normalized estimation error.

    ``sqrt(max(0, (ke/k1)*i1^2 + (ke/k2)*i2^2 + 2*cov*max(i1,0)*max(i2,0)))``.
    Either ``k`` may be ``inf``, dropping its term (that marginal treated as
    exactly known).
    """
    if not ke > 0:
        raise BadTuning(f"ke must be positive, got {ke!r}")
    for name, k in (("k1", k1), ("k2", k2)):
        if isnan(float(k)) or (not isinf(float(k)) and not float(k) >= 1):
            raise BadTuning(f"{name} must be >= 1 or inf, got {k!r}")
    term1 = 0.0 if isinf(float(k1)) else (ke / k1) * i1 * i1
    term2 = 0.0 if isinf(float(k2)) else (ke / k2) * i2 * i2
    cross = 2.0 * cov * max(i1, 0.0) * max(i2, 0.0)
    return sqrt(max(term1 + term2 + cross, 0.0))


def confidence_interval(
    p_hat: float, sigma: float, ke: float, n: int, level: float
) -> tuple[float, float]:
    """Two-sided normal confidence interval in the product form.

    Halfwidth ``ke**-0.5 * log(ke/n) * sigma * z`` with ``z`` the standard
    normal quantile at ``(1+level)/2`` (rational approximation, well beyond
    1e-8 accuracy).  Requires ``ke > n`` so the log factor is positive; the
    lower bound is floored at 0.
    """
    if not ke > n:
        raise BadTuning(f"confidence interval requires ke > n, got ke={ke!r}, n={n!r}")
    if not 0 < level < 1:
        raise BadTuning(f"level must lie in (0, 1), got {level!r}")
    z = float(ndtri(0.5 * (1.0 + level)))
    halfwidth = sigma * z * log(ke / n) / sqrt(ke)
    return (max(0.0, p_hat - halfwidth), p_hat + halfwidth)


def _estimate_at_ke(
    z1: np.ndarray,
    z2: np.ndarray,
    fit1: GpdTailFit,
    fit2: GpdTailFit,
    failure_set: FailureSet,
    tuning: TuningParams,
    ke: float,
) -> FailureProbabilityEstimate:
    n = len(z1)
    count = _count_inflated(z1, z2, failure_set, fit1, fit2, n, ke)
    p_hat = count / ke
    points = np.column_stack((z1, z2))
    i1 = estimate_I(points, failure_set, (fit1, fit2), n, ke, tuning.ell, 1)
    i2 = estimate_I(points, failure_set, (fit1, fit2), n, ke, tuning.ell, 2)
    cov = covariance_term(points, (fit1, fit2), n, ke, tuning.lam)
    if i1 < 0 and i2 < 0:
        # both boundary-mass estimates drowned in noise: no usable variance
        sigma = 0.0
    else:
        sigma = sigma_hat(i1, i2, cov, ke, fit1.k_i, fit2.k_i)
    lo, hi = confidence_interval(p_hat, sigma, ke, n, tuning.level)
    return FailureProbabilityEstimate(
        p_hat=p_hat,
        sigma_hat=sigma,
        ci_lower=lo,
        ci_upper=hi,
        ke=ke,
        n=n,
        count_in_inflated=count,
        i_hat_1=i1,
        i_hat_2=i2,
        cov_term=cov,
    )


def estimate_full(
    xs, ys, fits, failure_set: FailureSet, tuning: TuningParams
) -> FailureProbabilityEstimate:
    """Standardize once and assemble the complete estimate.

    Point estimate, both boundary-mass estimates, covariance term, sigma and
    the confidence interval, all at ``tuning.ke``.  When both boundary-mass
    estimates are negative, ``sigma_hat`` is reported as 0 and
    :meth:`FailureProbabilityEstimate.diagnostics` flags the estimate.
    """
    fit1, fit2 = fits
    pts = standardize(xs, ys, fit1, fit2)
    z1, z2 = _point_columns(pts)
    return _estimate_at_ke(z1, z2, fit1, fit2, failure_set, tuning, tuning.ke)


def stability_scan(
    xs, ys, fits, failure_set: FailureSet, tuning: TuningParams, ke_grid
) -> StabilityCurve:
    """Full estimate at every grid point, standardizing only once.

    The grid must be strictly increasing with every value above the sample
    size (the confidence interval requires ``ke > n``).
    """
    grid = [float(ke) for ke in ke_grid]
    if len(grid) == 0:
        raise BadGrid("ke grid is empty")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise BadGrid("ke grid must be strictly increasing")
    fit1, fit2 = fits
    pts = standardize(xs, ys, fit1, fit2)
    z1, z2 = _point_columns(pts)
    n = len(z1)
    if any(ke <= n for ke in grid):
        raise BadGrid(f"every grid value must exceed the sample size n={n}")
    rows = tuple(
        (ke, _estimate_at_ke(z1, z2, fit1, fit2, failure_set, tuning, ke))
        for ke in grid
    )
    return StabilityCurve(rows)
