from math import pi

import numpy as np
import pytest

from ...fields import TorusField, TorusGrid
from ...picard import PdeParams


@pytest.fixture(scope="function")
def grid_32() -> TorusGrid:
    return TorusGrid(dim=1, period=2 * pi, points_per_axis=32)


@pytest.fixture(scope="function")
def grid_256() -> TorusGrid:
    return TorusGrid(dim=1, period=2 * pi, points_per_axis=256)


@pytest.fixture(scope="function")
def desk_params() -> PdeParams:
    return PdeParams(nu=1.0, alpha=0.25, p=2.0, mu=1.0, lam=1.0, dim=1)


@pytest.fixture(scope="function")
def linear_params() -> PdeParams:
    """lambda = 0, so every Fourier mode evolves independently"""

    return PdeParams(nu=1.0, alpha=0.25, p=2.0, mu=0.5, lam=0.0, dim=1)


@pytest.fixture(scope="function")
def sine_32(grid_32: TorusGrid) -> TorusField:
    return TorusField.from_function(grid_32, np.sin)


@pytest.fixture(scope="function")
def sine_256(grid_256: TorusGrid) -> TorusField:
    return TorusField.from_function(grid_256, np.sin)
