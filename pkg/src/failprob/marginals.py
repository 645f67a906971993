"""Generalized-Pareto marginal tails and the standardization maps.

A fitted tail is the triple ``(gamma, sigma, mu)`` of a GPD distribution
function ``F(x) = 1 - (1 + gamma*(x - mu)/sigma)**(-1/gamma)`` together with
the bookkeeping pair ``(k_i, n)`` recording how many upper order statistics
out of how many observations back the fit.  Two maps move between the data
scale and the standard heavy-tailed scale:

* ``u_inverse`` sends an observation ``x`` to ``1/(1 - F(x))``, clamped to
  ``0`` / ``inf`` where the GPD expression leaves its domain;
* ``u_forward`` is its inverse, the fitted tail quantile function
  ``t -> mu + sigma*(t**gamma - 1)/gamma``.

Both use log1p/expm1 forms so the ``gamma -> 0`` limit is continuous in
floating point; the branch switches at ``|gamma| < GAMMA_ZERO_EPS``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadK, InvalidFit, InvalidSample, NonPositiveArg, NonPositiveGamma, NonPositiveTail

__all__ = [
    "GAMMA_ZERO_EPS",
    "MarginalSample",
    "GpdTailFit",
    "as_sample",
    "hill_estimate",
    "fit_marginal_hill",
    "make_fit",
    "u_inverse",
    "u_forward",
]

# below this the exponential-type (gamma = 0) branch is used
GAMMA_ZERO_EPS = 1e-10


class MarginalSample:
    """Raw observations of one coordinate plus a cached sorted view.

    Values must be finite and there must be at least one of them.  The sort
    is stable, so ties keep their input order and order statistics are
    deterministic.
    """

    __slots__ = ("_values", "_sorted")

    def __init__(self, values):
        arr = np.array(values, dtype=float, copy=True).reshape(-1)
        if arr.size < 1:
            raise InvalidSample("need at least one observation")
        if not np.all(np.isfinite(arr)):
            raise InvalidSample("sample contains non-finite values")
        arr.flags.writeable = False
        self._values = arr
        self._sorted = None

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def sorted_values(self) -> np.ndarray:
        if self._sorted is None:
            srt = np.sort(self._values, kind="stable")
            srt.flags.writeable = False
            self._sorted = srt
        return self._sorted

    def __len__(self) -> int:
        return int(self._values.size)

    def __repr__(self) -> str:  # pragma: no cover
        return f"MarginalSample(n={len(self)})"


def as_sample(values) -> MarginalSample:
    """Coerce an array-like (or pass through a MarginalSample)."""
    if isinstance(values, MarginalSample):
        return values
    return MarginalSample(values)


@dataclass(frozen=True)
class GpdTailFit:
    """One marginal's fitted GPD tail.

    gamma   extreme value index
    sigma   scale (> 0)
    mu      location
    k_i     upper order statistics backing the fit (2 <= k_i <= n)
    n       sample size
    """

    gamma: float
    sigma: float
    mu: float
    k_i: int
    n: int

    def __post_init__(self):
        for name in ("gamma", "sigma", "mu"):
            v = getattr(self, name)
            if not np.isfinite(v):
                raise InvalidFit(f"{name} must be finite, got {v!r}")
        if not self.sigma > 0:
            raise InvalidFit(f"sigma must be positive, got {self.sigma!r}")
        if int(self.k_i) != self.k_i or int(self.n) != self.n:
            raise InvalidFit("k_i and n must be integers")
        object.__setattr__(self, "k_i", int(self.k_i))
        object.__setattr__(self, "n", int(self.n))
        if not 2 <= self.k_i <= self.n:
            raise InvalidFit(f"need 2 <= k_i <= n, got k_i={self.k_i}, n={self.n}")

    @property
    def x_valid(self) -> float:
        """Upper threshold of the validated range: the point with fitted
        exceedance probability k_i/n."""
        return u_forward(self, self.n / self.k_i)


def make_fit(gamma: float, sigma: float, mu: float, k_i: int, n: int) -> GpdTailFit:
    """Build a tail fit from externally supplied parameters, stored verbatim."""
    return GpdTailFit(float(gamma), float(sigma), float(mu), k_i, n)


def hill_estimate(sample, k: int) -> float:
    """Hill estimator of the extreme value index from the top k log-ratios.

    Returns ``mean(log(X_{n-i+1:n} / X_{n-k:n}), i = 1..k)``.  Requires
    ``1 <= k <= n-1`` and a strictly positive order statistic
    ``X_{n-k:n}`` (hence all top k+1 values strictly positive).  The result
    is nonnegative, invariant under permutation of the input and invariant
    under positive rescaling of the sample.
    """
    s = as_sample(sample)
    n = len(s)
    if int(k) != k or not 1 <= k <= n - 1:
        raise BadK(f"need 1 <= k <= n-1 = {n - 1}, got k={k}")
    k = int(k)
    srt = s.sorted_values
    x0 = srt[n - k - 1]
    if not x0 > 0:
        raise NonPositiveTail(f"order statistic X_(n-k:n) = {x0!r} is not positive")
    return float(np.mean(np.log(srt[n - k :] / x0)))


def fit_marginal_hill(sample, k: int) -> GpdTailFit:
    """Hill-based tail fit: gamma from ``hill_estimate``, threshold location.

    Sets ``mu = X_{n-k:n}`` (the empirical (1 - k/n)-quantile) and
    ``sigma = gamma * mu``, so the fitted df satisfies ``F(mu) = 0`` and
    ``1 - F(x) = (x/mu)**(-1/gamma)`` above the threshold, i.e. it targets
    the exceedance law given ``X > mu``.  Downstream counting estimates are
    insensitive to that scale convention (points and sets are transformed by
    the same map), but absolute standardization -- in particular the
    covariance term's thresholds -- presumes a fit of the whole distribution
    function; supply one through :func:`make_fit` when that matters.

    Raises :class:`NonPositiveGamma` when the estimate is not positive
    (all top k+1 values tied); supply parameters via ``make_fit`` then.
    """
    s = as_sample(sample)
    gamma = hill_estimate(s, k)
    if not gamma > 0:
        raise NonPositiveGamma(
            "Hill estimate is not positive; supply gamma, sigma, mu via make_fit"
        )
    n = len(s)
    mu = float(s.sorted_values[n - int(k) - 1])
    return GpdTailFit(gamma, gamma * mu, mu, int(k), n)


def _split_scalar(x):
    arr = np.asarray(x, dtype=float)
    return arr, arr.ndim == 0


def u_inverse(fit: GpdTailFit, x):
    """Map data-scale ``x`` to the standard scale ``1/(1 - F(x))``.

    Evaluates ``(1 + gamma*(x - mu)/sigma)**(1/gamma)`` (``exp((x - mu)/sigma)``
    for gamma = 0).  Where the base is <= 0 the value is clamped: ``0`` for
    gamma > 0 and ``inf`` for gamma < 0, making the map total and
    non-decreasing on finite inputs.  Accepts scalars or arrays.
    """
    arr, scalar = _split_scalar(x)
    g = fit.gamma
    v = (arr - fit.mu) / fit.sigma
    with np.errstate(over="ignore"):
        if abs(g) < GAMMA_ZERO_EPS:
            out = np.exp(v)
        else:
            w = g * v
            ok = w > -1.0
            out = np.empty_like(v)
            out[ok] = np.exp(np.log1p(w[ok]) / g)
            out[~ok] = 0.0 if g > 0 else np.inf
    return float(out) if scalar else out


def u_forward(fit: GpdTailFit, t):
    """Fitted tail quantile function ``mu + sigma*(t**gamma - 1)/gamma``.

    Strictly increasing on ``t > 0``; ``gamma = 0`` reads as
    ``mu + sigma*log(t)``.  Raises :class:`NonPositiveArg` for ``t <= 0``
    (use the clamping-aware internal variant for limits at 0).
    """
    arr, scalar = _split_scalar(t)
    if not np.all(arr > 0):
        raise NonPositiveArg("tail quantile function requires t > 0")
    out = _u_forward_total(fit, arr)
    return float(out) if scalar else out


def _u_forward_total(fit: GpdTailFit, t):
    """u_forward extended to t in [0, inf] by continuity.

    t = 0 maps to mu - sigma/gamma for gamma > 0 and to -inf otherwise;
    t = inf maps to mu - sigma/gamma (the upper endpoint) for gamma < 0 and
    to inf otherwise.
    """
    t = np.asarray(t, dtype=float)
    g = fit.gamma
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        lt = np.log(t)
        if abs(g) < GAMMA_ZERO_EPS:
            return fit.mu + fit.sigma * lt
        return fit.mu + fit.sigma * np.expm1(g * lt) / g
