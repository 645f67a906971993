"""Backend selection for the counting kernels.

At import time the compiled Cython extension is preferred; the NumPy
implementation is the fallback.  Override with the environment variable
``FAILPROB_BACKEND=python`` or ``FAILPROB_BACKEND=cython`` (the latter fails
loudly if the extension is missing).  ``BACKEND`` records the choice.

The wrappers coerce coordinate arrays to C-contiguous float64 once so the
two backends see identical inputs.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = ["BACKEND", "count_halfplane", "count_rectangle"]

_requested = os.environ.get("FAILPROB_BACKEND", "auto").strip().lower()

if _requested in ("auto", ""):
    try:
        from . import _kernels_cy as _impl

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"
elif _requested == "cython":
    from . import _kernels_cy as _impl

    BACKEND = "cython"
elif _requested in ("python", "numpy"):
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    raise ImportError(
        f"unknown FAILPROB_BACKEND={_requested!r}; use 'auto', 'cython' or 'python'"
    )


def _c(arr) -> np.ndarray:
    return np.ascontiguousarray(arr, dtype=np.float64)


def count_halfplane(z1, z2, scale, stretch1, stretch2, fit1, fit2, alpha1, alpha2, retention) -> int:
    """Count standardized points inside the stretched inflated half-plane."""
    return int(
        _impl.count_halfplane(
            _c(z1),
            _c(z2),
            float(scale),
            float(stretch1),
            float(stretch2),
            fit1.gamma,
            fit1.sigma,
            fit1.mu,
            fit2.gamma,
            fit2.sigma,
            fit2.mu,
            float(alpha1),
            float(alpha2),
            float(retention),
        )
    )


def count_rectangle(z1, z2, a, b) -> int:
    """Count points with both coordinates strictly above (a, b)."""
    return int(_impl.count_rectangle(_c(z1), _c(z2), float(a), float(b)))
