import numpy as np
import pytest

from hypergrowth import HyperbolicParams, make_ratio

# The two synthetic parameter sets used throughout: singularities near
# 2045.45 and 2089.55, ratio escalating toward the earlier one.
F_PARAMS = HyperbolicParams(a=4.5, k=2.2e-3)
G_PARAMS = HyperbolicParams(a=7.0, k=3.35e-3)


@pytest.fixture
def f_params():
    return F_PARAMS


@pytest.fixture
def g_params():
    return G_PARAMS


@pytest.fixture
def escalating_model():
    return make_ratio(F_PARAMS, G_PARAMS)


@pytest.fixture
def diminishing_model():
    return make_ratio(G_PARAMS, F_PARAMS)


def random_params(rng: np.random.Generator, t_s_range=(50.0, 5000.0)) -> HyperbolicParams:
    """Random valid parameters with singularity time in the given range."""
    a = 10.0 ** rng.uniform(-2, 2)
    t_s = rng.uniform(*t_s_range)
    return HyperbolicParams(a=a, k=a / t_s)
