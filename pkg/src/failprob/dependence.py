"""Standardization of paired observations and the empirical exponent measure.

``standardize`` maps each raw pair through the per-coordinate ``u_inverse``
so both coordinates live on the (approximately) standard heavy-tailed scale.
:class:`EmpiricalExponentMeasure` puts mass ``1/mass_scale`` on each point;
with points rescaled by ``k/n`` (see :meth:`from_standardized`) its
rectangle counts estimate the limiting exponent measure of the joint tail.

Clamped coordinates are kept: a ``0`` never lies in an open upper rectangle,
an ``inf`` lies in every one.
"""

from __future__ import annotations

import numpy as np

from .errors import BadRect, InvalidMeasure, LengthMismatch
from .marginals import GpdTailFit, as_sample, u_inverse
from ._kernels import count_rectangle

__all__ = [
    "standardize",
    "EmpiricalExponentMeasure",
    "nu_hat_rectangle",
    "nu_hat_set",
]


def standardize(xs, ys, fit1: GpdTailFit, fit2: GpdTailFit) -> np.ndarray:
    """Per-coordinate ``u_inverse`` of paired samples.

    Returns an ``(n, 2)`` array whose i-th row is
    ``(u_inverse(fit1, x_i), u_inverse(fit2, y_i))``, order preserved.
    """
    x = as_sample(xs)
    y = as_sample(ys)
    if len(x) != len(y):
        raise LengthMismatch(f"coordinate samples differ in length: {len(x)} vs {len(y)}")
    return np.column_stack((u_inverse(fit1, x.values), u_inverse(fit2, y.values)))


def _as_points(points) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise InvalidMeasure(f"points must have shape (n, 2), got {pts.shape}")
    return pts


class EmpiricalExponentMeasure:
    """Point masses ``1/mass_scale`` at nonnegative standardized points."""

    __slots__ = ("_points", "_mass_scale")

    def __init__(self, points, mass_scale: float):
        pts = _as_points(points).copy()
        if np.any(np.isnan(pts)) or np.any(pts < 0):
            raise InvalidMeasure("points must be nonnegative (inf allowed, nan not)")
        if not mass_scale > 0:
            raise InvalidMeasure(f"mass_scale must be positive, got {mass_scale!r}")
        pts.flags.writeable = False
        self._points = pts
        self._mass_scale = float(mass_scale)

    @classmethod
    def from_standardized(cls, points, k: float) -> "EmpiricalExponentMeasure":
        """Tail empirical measure of standardized points.

        Rescales the points by ``k/n`` and assigns mass ``1/k``, so the
        measure of a fixed upper rectangle estimates the exponent measure
        (total mass of the quadrant is ``n/k``).
        """
        pts = _as_points(points)
        n = pts.shape[0]
        if n < 1:
            raise InvalidMeasure("need at least one point")
        return cls(pts * (float(k) / n), k)

    @property
    def points(self) -> np.ndarray:
        return self._points

    @property
    def mass_scale(self) -> float:
        return self._mass_scale

    def __len__(self) -> int:
        return int(self._points.shape[0])

    def __repr__(self) -> str:  # pragma: no cover
        return f"EmpiricalExponentMeasure(n={len(self)}, mass_scale={self._mass_scale})"


def nu_hat_rectangle(measure: EmpiricalExponentMeasure, a: float, b: float) -> float:
    """Measure of the open upper rectangle ``(a, inf) x (b, inf)``.

    Strict inequalities on both coordinates; corners must be nonnegative.
    """
    if not (a >= 0 and b >= 0):
        raise BadRect(f"rectangle corner must be nonnegative, got ({a!r}, {b!r})")
    pts = measure.points
    return count_rectangle(pts[:, 0], pts[:, 1], a, b) / measure.mass_scale


def nu_hat_set(measure: EmpiricalExponentMeasure, member) -> float:
    """Measure of an arbitrary set given by a total membership predicate."""
    pts = measure.points
    hits = apply_predicate(member, pts[:, 0], pts[:, 1])
    return int(np.count_nonzero(hits)) / measure.mass_scale


def apply_predicate(member, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Evaluate a (x, y) -> bool predicate over point arrays.

    Tries one vectorized call first; a predicate that does not broadcast to
    a boolean array of the right shape is evaluated point by point.
    """
    try:
        out = np.asarray(member(x, y))
        if out.shape == x.shape and out.dtype == np.bool_:
            return out
    except Exception:
        pass
    return np.fromiter(
        (bool(member(float(a), float(b))) for a, b in zip(x, y)),
        dtype=bool,
        count=len(x),
    )
