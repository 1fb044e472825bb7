from math import pi

import numpy as np
import pytest

from ..pde_params import PdeParams
from ...fields import TorusField, TorusGrid


@pytest.fixture(scope="function")
def desk_params() -> PdeParams:
    """nu = mu = 1, lambda = 1, p = 2, alpha = 1/4 in one dimension"""

    return PdeParams(nu=1.0, alpha=0.25, p=2.0, mu=1.0, lam=1.0, dim=1)


@pytest.fixture(scope="function")
def linear_params() -> PdeParams:
    return PdeParams(nu=1.0, alpha=0.25, p=2.0, mu=1.0, lam=0.0, dim=1)


@pytest.fixture(scope="function")
def heat_params() -> PdeParams:
    return PdeParams(nu=1.0, alpha=0.25, p=2.0, mu=0.0, lam=0.0, dim=1)


@pytest.fixture(scope="function")
def grid_1d() -> TorusGrid:
    return TorusGrid(dim=1, period=2 * pi, points_per_axis=256)


@pytest.fixture(scope="function")
def sine(grid_1d: TorusGrid) -> TorusField:
    return TorusField.from_function(grid_1d, np.sin)
