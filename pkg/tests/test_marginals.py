import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from failprob import (
    BadK,
    GpdTailFit,
    InvalidFit,
    InvalidSample,
    MarginalSample,
    NonPositiveArg,
    NonPositiveGamma,
    NonPositiveTail,
    fit_marginal_hill,
    hill_estimate,
    make_fit,
    u_forward,
    u_inverse,
)

E = math.e


class TestMarginalSample:
    def test_keeps_values_and_sorted_view(self):
        s = MarginalSample([3.0, 1.0, 2.0])
        assert list(s.values) == [3.0, 1.0, 2.0]
        assert list(s.sorted_values) == [1.0, 2.0, 3.0]
        assert len(s) == 3

    def test_rejects_empty_and_nonfinite(self):
        with pytest.raises(InvalidSample):
            MarginalSample([])
        with pytest.raises(InvalidSample):
            MarginalSample([1.0, np.nan])
        with pytest.raises(InvalidSample):
            MarginalSample([1.0, np.inf])


class TestHillEstimate:
    def test_geometric_sample(self):
        # log-ratios are (3 + 2 + 1)/3
        assert hill_estimate([1.0, E, E**2, E**3], 3) == pytest.approx(2.0, rel=1e-12)

    def test_constant_sample_gives_zero(self):
        assert hill_estimate([5.0, 5.0, 5.0, 5.0], 3) == 0.0

    def test_pareto_consistency(self):
        # X = U**-gamma has tail index gamma
        rng = np.random.default_rng(42)
        gamma = 0.5
        x = rng.random(100_000) ** -gamma
        assert hill_estimate(x, 1000) == pytest.approx(gamma, abs=0.05)

    def test_bad_k(self):
        with pytest.raises(BadK):
            hill_estimate([1.0, 2.0, 3.0], 0)
        with pytest.raises(BadK):
            hill_estimate([1.0, 2.0, 3.0], 3)  # k = n leaves no reference point

    def test_nonpositive_tail(self):
        with pytest.raises(NonPositiveTail):
            hill_estimate([0.0, 1.0, 2.0, 3.0], 3)
        with pytest.raises(NonPositiveTail):
            hill_estimate([-1.0, 1.0, 2.0, 3.0], 3)

    def test_permutation_invariance_exact(self):
        rng = np.random.default_rng(7)
        x = rng.pareto(2.0, 500) + 1.0
        shuffled = x.copy()
        rng.shuffle(shuffled)
        assert hill_estimate(x, 100) == hill_estimate(shuffled, 100)

    def test_scale_equivariance(self):
        rng = np.random.default_rng(8)
        x = rng.pareto(1.5, 400) + 1.0
        base = hill_estimate(x, 80)
        for c in (1e-6, 0.5, 3.0, 1e7):
            assert abs(hill_estimate(c * x, 80) - base) <= 1e-12


class TestFitMarginalHill:
    def test_geometric_sample_fit(self):
        fit = fit_marginal_hill([1.0, E, E**2, E**3], 3)
        assert fit.gamma == pytest.approx(2.0, rel=1e-12)
        assert fit.mu == 1.0  # X_(1:4)
        assert fit.sigma == pytest.approx(2.0, rel=1e-12)
        assert fit.k_i == 3 and fit.n == 4

    def test_threshold_is_order_statistic(self):
        rng = np.random.default_rng(42)
        x = rng.random(100_000) ** -0.5
        k = 1000
        fit = fit_marginal_hill(x, k)
        assert fit.mu == np.sort(x)[len(x) - k - 1]
        assert fit.gamma == pytest.approx(0.5, abs=0.05)

    def test_k_equals_n_rejected(self):
        with pytest.raises(BadK):
            fit_marginal_hill([1.0, 2.0, 3.0, 4.0], 4)

    def test_tied_sample_rejected(self):
        with pytest.raises(NonPositiveGamma):
            fit_marginal_hill([5.0, 5.0, 5.0, 5.0], 3)


class TestMakeFit:
    def test_stores_verbatim(self, buildings_fit, contents_fit):
        assert (buildings_fit.gamma, buildings_fit.sigma, buildings_fit.mu) == (0.57, 0.54, 0.91)
        assert (buildings_fit.k_i, buildings_fit.n) == (900, 3976)
        assert (contents_fit.gamma, contents_fit.sigma) == (0.72, 0.47)

    def test_invalid_parameters(self):
        with pytest.raises(InvalidFit):
            make_fit(0.5, -1.0, 0.0, 10, 100)
        with pytest.raises(InvalidFit):
            make_fit(0.5, 0.0, 0.0, 10, 100)
        with pytest.raises(InvalidFit):
            make_fit(0.5, 1.0, 0.0, 1, 100)  # k_i < 2
        with pytest.raises(InvalidFit):
            make_fit(0.5, 1.0, 0.0, 101, 100)  # k_i > n

    @pytest.mark.parametrize(
        "params",
        [(0.57, 0.54, 0.91, 900, 3976), (0.72, 0.47, 0.15, 600, 3976), (1.0, 2.0, 0.6, 10, 50), (-0.3, 1.5, 2.0, 25, 400), (0.0, 1.0, 0.0, 5, 20)],
    )
    def test_validity_threshold(self, params):
        # fitted exceedance probability at x_valid equals k_i/n
        fit = make_fit(*params)
        survival = 1.0 / u_inverse(fit, fit.x_valid)
        assert survival == pytest.approx(fit.k_i / fit.n, rel=1e-9)


class TestUInverse:
    def test_buildings_anchor(self, buildings_fit):
        value = u_inverse(buildings_fit, 100.0)
        assert value == pytest.approx(3550.18920546039, rel=1e-12)
        assert abs(value - 3550.0) < 0.5

    def test_contents_anchor(self, contents_fit):
        assert u_inverse(contents_fit, 200.0) == pytest.approx(2848.785610415728, rel=1e-12)

    def test_gamma_zero(self):
        fit = make_fit(0.0, 2.0, 1.0, 2, 10)
        assert u_inverse(fit, 1.0) == pytest.approx(1.0, rel=1e-15)

    def test_clamped_to_zero(self):
        fit = make_fit(0.5, 1.0, 10.0, 2, 10)
        assert u_inverse(fit, 0.0) == 0.0

    def test_clamped_to_inf_for_negative_gamma(self):
        fit = make_fit(-0.5, 1.0, 0.0, 2, 10)
        # base 1 + gamma*(x-mu)/sigma hits zero at x = 2
        assert u_inverse(fit, 2.0) == np.inf
        assert u_inverse(fit, 5.0) == np.inf

    def test_vectorized(self, buildings_fit):
        xs = np.array([10.0, 100.0, 1000.0])
        out = u_inverse(buildings_fit, xs)
        assert out.shape == (3,)
        assert np.all(np.diff(out) > 0)


class TestUForward:
    def test_identity_parameters(self, identity_fit):
        assert u_forward(identity_fit, 7.0) == pytest.approx(7.0, rel=1e-15)

    def test_round_trip_contents(self, contents_fit):
        t = u_inverse(contents_fit, 200.0)
        assert u_forward(contents_fit, t) == pytest.approx(200.0, rel=1e-6)

    def test_gamma_zero(self):
        fit = make_fit(0.0, 2.0, 1.0, 2, 10)
        assert u_forward(fit, E) == pytest.approx(3.0, rel=1e-12)

    def test_nonpositive_argument(self, identity_fit):
        with pytest.raises(NonPositiveArg):
            u_forward(identity_fit, 0.0)
        with pytest.raises(NonPositiveArg):
            u_forward(identity_fit, -3.0)


fits = st.builds(
    make_fit,
    gamma=st.one_of(st.floats(-2.0, 2.0), st.just(0.0)),
    sigma=st.floats(1e-3, 1e3),
    mu=st.floats(-100.0, 100.0),
    k_i=st.integers(2, 50),
    n=st.integers(50, 10_000),
)


class TestTransformProperties:
    @settings(max_examples=300, deadline=None)
    @given(fit=fits, t=st.floats(1e-3, 1e6))
    def test_round_trip(self, fit, t):
        x = u_forward(fit, t)
        back = u_forward(fit, u_inverse(fit, x))
        assert back == pytest.approx(x, rel=1e-9, abs=1e-12)

    @settings(max_examples=200, deadline=None)
    @given(fit=fits)
    def test_monotone(self, fit):
        t = np.geomspace(1e-3, 1e6, 50)
        fwd = u_forward(fit, t)
        assert np.all(fwd[1:] >= fwd[:-1])
        # comparison, not diff: the clamped region repeats inf and inf - inf is nan
        x = np.linspace(fit.mu - 3 * fit.sigma, fit.mu + 50 * fit.sigma, 80)
        inv = u_inverse(fit, x)
        assert np.all(inv[1:] >= inv[:-1])

    def test_gamma_continuity_at_zero(self):
        t = np.geomspace(0.1, 1e6, 200)
        zero = make_fit(0.0, 2.0, 1.0, 2, 10)
        for g in (1e-8, -1e-8):
            near = make_fit(g, 2.0, 1.0, 2, 10)
            np.testing.assert_allclose(u_forward(near, t), u_forward(zero, t), rtol=1e-6)
            x = u_forward(zero, t)
            np.testing.assert_allclose(u_inverse(near, x), u_inverse(zero, x), rtol=1e-6)
