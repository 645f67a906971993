"""Failure regions and membership of standardized points in their inflated images.

A failure set is a coordinatewise-increasing region of the plane: either the
linear half-plane ``{(x, y): alpha1*x + alpha2*y > retention}`` or a general
region given by a membership predicate that the caller guarantees to be
increasing (if ``(x, y)`` is in the set, so is every ``(x', y')`` with
``x' >= x`` and ``y' >= y``).

Membership of a standardized point ``z`` in the inflated transformed set is
decided by mapping the point forward into data coordinates::

    z in (n/ke) * U^-1(D)   <=>   U(ke/n * z) in D

which is equivalent by strict monotonicity of the per-coordinate maps and
never requires the transformed set itself.  ``stretch`` factors divide one
coordinate before the forward map; they realize the slightly shrunken /
enlarged sets used by the variance estimator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np

from .errors import BadTuning, InvalidFailureSet, NotHalfplane
from .dependence import apply_predicate
from .marginals import GpdTailFit, _u_forward_total, u_inverse

__all__ = [
    "LinearHalfplane",
    "GeneralIncreasing",
    "FailureSet",
    "TuningParams",
    "contains",
    "contains_many",
    "inflated_contains",
    "crude_ke_bound",
]


@dataclass(frozen=True)
class LinearHalfplane:
    """``{(x, y): alpha1*x + alpha2*y > retention}`` with positive parameters."""

    alpha1: float
    alpha2: float
    retention: float

    def __post_init__(self):
        for name in ("alpha1", "alpha2", "retention"):
            v = getattr(self, name)
            if not (np.isfinite(v) and v > 0):
                raise InvalidFailureSet(f"{name} must be finite and positive, got {v!r}")


@dataclass(frozen=True)
class GeneralIncreasing:
    """Failure set given by a membership predicate.

    The predicate must be total and coordinatewise increasing; that contract
    is the caller's to keep (property-test it for nontrivial predicates).
    It may receive ``-inf``/``inf`` coordinates arising from clamped
    standardized points.
    """

    member: Callable[[float, float], bool] = field(compare=False)


FailureSet = Union[LinearHalfplane, GeneralIncreasing]


@dataclass(frozen=True)
class TuningParams:
    """Estimator tuning.

    ke       the inflation product (> 0); all estimates depend on the pair
             (k, e) only through this product
    k_for_variance
             optional separate record of the empirical-measure divisor;
             unused by the product-form formulas, kept for bookkeeping
    ell      half-width of the boundary-difference sets (0 < ell < 0.5)
    lam      threshold relaxation of the covariance estimator (0 < lam <= 1)
    level    two-sided confidence level (0 < level < 1)
    """

    ke: float
    k_for_variance: int | None = None
    ell: float = 0.1
    lam: float = 1.0
    level: float = 0.95

    def __post_init__(self):
        if not (np.isfinite(self.ke) and self.ke > 0):
            raise BadTuning(f"ke must be finite and positive, got {self.ke!r}")
        if not 0 < self.ell < 0.5:
            raise BadTuning(f"ell must lie in (0, 0.5), got {self.ell!r}")
        if not 0 < self.lam <= 1:
            raise BadTuning(f"lambda must lie in (0, 1], got {self.lam!r}")
        if not 0 < self.level < 1:
            raise BadTuning(f"level must lie in (0, 1), got {self.level!r}")


def contains(failure_set: FailureSet, x: float, y: float) -> bool:
    """Strict membership test in data coordinates."""
    if isinstance(failure_set, LinearHalfplane):
        return bool(
            failure_set.alpha1 * x + failure_set.alpha2 * y > failure_set.retention
        )
    return bool(failure_set.member(x, y))


def contains_many(failure_set: FailureSet, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Vectorized :func:`contains` over coordinate arrays."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if isinstance(failure_set, LinearHalfplane):
        with np.errstate(invalid="ignore"):
            return failure_set.alpha1 * x + failure_set.alpha2 * y > failure_set.retention
    return apply_predicate(failure_set.member, x, y)


def _check_inflation(ke: float, stretch1: float, stretch2: float) -> None:
    if not ke > 0:
        raise BadTuning(f"ke must be positive, got {ke!r}")
    if not (stretch1 > 0 and stretch2 > 0):
        raise BadTuning(f"stretches must be positive, got ({stretch1!r}, {stretch2!r})")


def inflated_contains(
    failure_set: FailureSet,
    fit1: GpdTailFit,
    fit2: GpdTailFit,
    n: int,
    ke: float,
    z,
    stretch1: float = 1.0,
    stretch2: float = 1.0,
) -> bool:
    """Is the standardized point in the stretched inflated transformed set?

    Decides ``z in {(s1*u, s2*v): (u, v) in (n/ke) * U^-1(D)}`` via the
    forward maps; depends on ``(n, ke)`` only through ``ke/n``.  Clamped
    coordinates evaluate by their limits: ``z = inf`` makes that coordinate's
    image ``inf`` (or the finite upper endpoint when ``gamma < 0``); ``z = 0``
    maps to ``mu - sigma/gamma`` for ``gamma > 0`` and ``-inf`` otherwise.
    For the half-plane, a nan score (``inf`` plus ``-inf``) counts as outside.
    """
    _check_inflation(ke, stretch1, stretch2)
    z1, z2 = float(z[0]), float(z[1])
    scale = ke / n
    x = float(_u_forward_total(fit1, (scale * z1) / stretch1))
    y = float(_u_forward_total(fit2, (scale * z2) / stretch2))
    if isinstance(failure_set, LinearHalfplane):
        score = failure_set.alpha1 * x + failure_set.alpha2 * y
        return bool(score > failure_set.retention)  # nan compares false
    return bool(failure_set.member(x, y))


def crude_ke_bound(failure_set: FailureSet, fit1: GpdTailFit, fit2: GpdTailFit) -> float:
    """Upper guidance bound on ke for a half-plane failure set.

    ``min_i k_i * u_inverse(fit_i, retention/alpha_i)``: above it, membership
    decisions start depending on the fitted tails outside their validated
    range.  Guidance, not a hard limit.
    """
    if not isinstance(failure_set, LinearHalfplane):
        raise NotHalfplane("crude_ke_bound is defined for LinearHalfplane only")
    b1 = fit1.k_i * u_inverse(fit1, failure_set.retention / failure_set.alpha1)
    b2 = fit2.k_i * u_inverse(fit2, failure_set.retention / failure_set.alpha2)
    return float(min(b1, b2))
