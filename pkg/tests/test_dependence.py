import numpy as np
import pytest

from failprob import (
    BadRect,
    EmpiricalExponentMeasure,
    InvalidMeasure,
    LengthMismatch,
    PolarModel,
    exact_margin_fits,
    nu_hat_rectangle,
    nu_hat_set,
    sample_polar,
    standardize,
)


class TestStandardize:
    def test_paper_fits(self, buildings_fit, contents_fit):
        pts = standardize([100.0], [200.0], buildings_fit, contents_fit)
        assert pts.shape == (1, 2)
        assert pts[0, 0] == pytest.approx(3550.18920546039, rel=1e-12)
        assert pts[0, 1] == pytest.approx(2848.785610415728, rel=1e-12)

    def test_identity_fits(self, identity_fit):
        pts = standardize([3.0], [4.0], identity_fit, identity_fit)
        np.testing.assert_allclose(pts, [[3.0, 4.0]], rtol=1e-12)

    def test_length_mismatch(self, identity_fit):
        with pytest.raises(LengthMismatch):
            standardize([1.0, 2.0], [1.0], identity_fit, identity_fit)

    def test_order_preserved(self, identity_fit):
        pts = standardize([5.0, 2.0, 9.0], [1.0, 7.0, 3.0], identity_fit, identity_fit)
        np.testing.assert_allclose(pts[:, 0], [5.0, 2.0, 9.0])
        np.testing.assert_allclose(pts[:, 1], [1.0, 7.0, 3.0])


class TestEmpiricalMeasure:
    def test_rectangle_hand_count(self):
        m = EmpiricalExponentMeasure([(3.0, 4.0), (10.0, 1.0), (0.5, 8.0)], mass_scale=2.0)
        assert nu_hat_rectangle(m, 2.0, 3.0) == 0.5

    def test_rectangle_empty(self):
        m = EmpiricalExponentMeasure([(3.0, 4.0), (10.0, 1.0)], mass_scale=2.0)
        assert nu_hat_rectangle(m, 1e300, 0.0) == 0.0

    def test_rectangle_boundary_excluded(self):
        m = EmpiricalExponentMeasure([(2.0, 3.0)], mass_scale=1.0)
        assert nu_hat_rectangle(m, 2.0, 3.0) == 0.0
        assert nu_hat_rectangle(m, 1.9, 2.9) == 1.0

    def test_rectangle_negative_corner(self):
        m = EmpiricalExponentMeasure([(2.0, 3.0)], mass_scale=1.0)
        with pytest.raises(BadRect):
            nu_hat_rectangle(m, -1.0, 0.0)

    def test_infinite_coordinate_counts(self):
        m = EmpiricalExponentMeasure([(np.inf, 5.0)], mass_scale=1.0)
        assert nu_hat_rectangle(m, 1e308, 4.0) == 1.0

    def test_set_hand_count(self):
        m = EmpiricalExponentMeasure([(3.0, 4.0), (10.0, 1.0)], mass_scale=4.0)
        assert nu_hat_set(m, lambda z1, z2: z1 + z2 > 5) == 0.5

    def test_set_always_false(self):
        m = EmpiricalExponentMeasure([(3.0, 4.0), (10.0, 1.0)], mass_scale=4.0)
        assert nu_hat_set(m, lambda z1, z2: False) == 0.0

    def test_set_always_true_total_mass(self):
        pts = [(float(i), float(i)) for i in range(7)]
        m = EmpiricalExponentMeasure(pts, mass_scale=2.0)
        assert nu_hat_set(m, lambda z1, z2: True) == 3.5

    def test_from_standardized_total_mass(self):
        rng = np.random.default_rng(0)
        pts = rng.uniform(1.0, 10.0, size=(40, 2))
        m = EmpiricalExponentMeasure.from_standardized(pts, k=8)
        assert nu_hat_set(m, lambda z1, z2: True) == 40 / 8

    def test_invalid_construction(self):
        with pytest.raises(InvalidMeasure):
            EmpiricalExponentMeasure([(1.0, -0.5)], mass_scale=1.0)
        with pytest.raises(InvalidMeasure):
            EmpiricalExponentMeasure([(1.0, 2.0)], mass_scale=0.0)
        with pytest.raises(InvalidMeasure):
            EmpiricalExponentMeasure([(np.nan, 2.0)], mass_scale=1.0)

    def test_additivity_exact(self):
        rng = np.random.default_rng(11)
        pts = rng.pareto(1.0, size=(500, 2)) + 0.1
        m = EmpiricalExponentMeasure(pts, mass_scale=37.0)
        p = lambda z1, z2: z1 > 3.0
        q = lambda z1, z2: z1 <= 3.0
        either = lambda z1, z2: (z1 > 3.0) | (z1 <= 3.0)
        assert nu_hat_set(m, p) + nu_hat_set(m, q) == nu_hat_set(m, either)

    def test_rectangle_monotone(self):
        rng = np.random.default_rng(12)
        pts = rng.pareto(1.0, size=(300, 2))
        m = EmpiricalExponentMeasure(pts, mass_scale=10.0)
        for _ in range(200):
            a, b = rng.uniform(0, 5, 2)
            da, db = rng.uniform(0, 5, 2)
            assert nu_hat_rectangle(m, a, b) >= nu_hat_rectangle(m, a + da, b + db)

    def test_scalar_predicate_falls_back_to_loop(self):
        import math

        m = EmpiricalExponentMeasure([(4.0, 9.0), (0.5, 0.5)], mass_scale=1.0)
        # math.sqrt rejects arrays, so the vectorized attempt cannot be used
        assert nu_hat_set(m, lambda z1, z2: math.sqrt(z1) > 1.0) == 1.0


class TestEmpiricalHomogeneity:
    def test_scaling_law_on_polar_sample(self):
        n, k = 200_000, 2000
        model = PolarModel()
        fit1, fit2 = exact_margin_fits(model, k, k, n)
        xs, ys = sample_polar(model, n, seed=42)
        pts = standardize(xs, ys, fit1, fit2)
        m = EmpiricalExponentMeasure.from_standardized(pts, k=k)
        base = nu_hat_rectangle(m, 1.0, 1.0)
        assert base == pytest.approx(2.0 - np.sqrt(2.0), abs=0.05)
        tol = 4.0 * np.sqrt(base / k)
        for t in (2.0, 5.0):
            scaled = nu_hat_rectangle(m, t, t)
            assert abs(t * scaled - base) <= tol
