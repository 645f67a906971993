#!/usr/bin/env python3
"""Benchmark the compiled counting kernels against the NumPy fallback.

Runs the half-plane membership count (the hot loop of every estimate and
stability scan) and the joint rectangle count on synthetic standardized
points, and reports per-call times plus the speedup.  Also cross-checks that
both backends return identical counts on the same data.

Usage:
    python benchmarks/bench_kernels.py [--n 2000000] [--reps 20]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from failprob import _kernels_py
from failprob.polar import PolarModel, exact_margin_fits, sample_polar
from failprob.dependence import standardize

try:
    from failprob import _kernels_cy
except ImportError:
    _kernels_cy = None


def _time_call(fn, args, reps):
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=2_000_000, help="number of points")
    parser.add_argument("--reps", type=int, default=20, help="repetitions (best time wins)")
    args = parser.parse_args()

    model = PolarModel()
    fit1, fit2 = exact_margin_fits(model, args.n // 10, args.n // 10, args.n)
    xs, ys = sample_polar(model, args.n, seed=12345)
    pts = standardize(xs, ys, fit1, fit2)
    z1 = np.ascontiguousarray(pts[:, 0])
    z2 = np.ascontiguousarray(pts[:, 1])

    scale = 10.0 * args.n / args.n  # ke = 10n
    hp_args = (
        z1, z2, 1.0 / scale, 1.0, 0.9,
        fit1.gamma, fit1.sigma, fit1.mu,
        fit2.gamma, fit2.sigma, fit2.mu,
        1.0, 1.0, 2546.479,
    )
    rect_args = (z1, z2, args.n / 2000.0, args.n / 2000.0)

    print(f"n = {args.n}, reps = {args.reps} (best-of)")
    rows = []
    t_py_hp, c_py_hp = _time_call(_kernels_py.count_halfplane, hp_args, args.reps)
    t_py_rc, c_py_rc = _time_call(_kernels_py.count_rectangle, rect_args, args.reps)
    rows.append(("numpy", t_py_hp, c_py_hp, t_py_rc, c_py_rc))

    if _kernels_cy is not None:
        t_cy_hp, c_cy_hp = _time_call(_kernels_cy.count_halfplane, hp_args, args.reps)
        t_cy_rc, c_cy_rc = _time_call(_kernels_cy.count_rectangle, rect_args, args.reps)
        rows.append(("cython", t_cy_hp, c_cy_hp, t_cy_rc, c_cy_rc))

    print(f"{'backend':<8} {'halfplane':>12} {'count':>9} {'rectangle':>12} {'count':>9}")
    for name, t_hp, c_hp, t_rc, c_rc in rows:
        print(f"{name:<8} {t_hp * 1e3:>10.2f}ms {c_hp:>9} {t_rc * 1e3:>10.2f}ms {c_rc:>9}")

    if _kernels_cy is None:
        print("compiled extension not available; nothing to compare")
        return 0

    if (c_py_hp, c_py_rc) != (c_cy_hp, c_cy_rc):
        print("MISMATCH: backends disagree on counts")
        return 1
    print(f"speedup: halfplane x{t_py_hp / t_cy_hp:.2f}, rectangle x{t_py_rc / t_cy_rc:.2f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
