"""NumPy implementations of the hot counting kernels.

Selected by :mod:`failprob._kernels` when the compiled extension is absent
(or when ``FAILPROB_BACKEND=python``).  Semantics must match
``_kernels_cy.pyx`` exactly, including IEEE inf/nan handling of clamped
coordinates: a coordinate image of -inf paired with +inf yields nan, and a
nan half-plane score counts as outside (strict ``>`` fails).
"""

from __future__ import annotations

import numpy as np

_GAMMA_ZERO_EPS = 1e-10


def _forward(t, gamma, sigma, mu):
    # tail quantile map on [0, inf]; log(0) -> -inf gives the limit values
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        lt = np.log(t)
        if abs(gamma) < _GAMMA_ZERO_EPS:
            return mu + sigma * lt
        return mu + sigma * np.expm1(gamma * lt) / gamma


def count_halfplane(
    z1,
    z2,
    scale,
    stretch1,
    stretch2,
    gamma1,
    sigma1,
    mu1,
    gamma2,
    sigma2,
    mu2,
    alpha1,
    alpha2,
    retention,
):
    """#{i : a1*U1(scale*z1[i]/s1) + a2*U2(scale*z2[i]/s2) > retention}."""
    x = _forward((scale * z1) / stretch1, gamma1, sigma1, mu1)
    y = _forward((scale * z2) / stretch2, gamma2, sigma2, mu2)
    with np.errstate(invalid="ignore"):
        return int(np.count_nonzero(alpha1 * x + alpha2 * y > retention))


def count_rectangle(z1, z2, a, b):
    """#{i : z1[i] > a and z2[i] > b} (strict on both coordinates)."""
    return int(np.count_nonzero((z1 > a) & (z2 > b)))
