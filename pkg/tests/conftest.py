import numpy as np
import pytest

from failprob import make_fit


@pytest.fixture
def buildings_fit():
    """Published fitted tail for the first claims coordinate."""
    return make_fit(0.57, 0.54, 0.91, 900, 3976)


@pytest.fixture
def contents_fit():
    """Published fitted tail for the second claims coordinate."""
    return make_fit(0.72, 0.47, 0.15, 600, 3976)


@pytest.fixture
def identity_fit():
    """gamma=sigma=mu=1 makes both transform maps the identity."""
    return make_fit(1.0, 1.0, 1.0, 2, 5)


@pytest.fixture
def micro_points():
    """Five standardized points used by the hand-counted examples."""
    return np.array([[100.0, 50.0], [300.0, 400.0], [5.0, 2.0], [1000.0, 900.0], [60.0, 38.0]])
