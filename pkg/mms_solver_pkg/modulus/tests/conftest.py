from math import pi

import numpy as np
import pytest

from ...fields import TorusField, TorusGrid
from ...picard import PdeParams


@pytest.fixture(scope="function")
def grid_1d() -> TorusGrid:
    return TorusGrid(dim=1, period=2 * pi, points_per_axis=256)


@pytest.fixture(scope="function")
def sine(grid_1d: TorusGrid) -> TorusField:
    return TorusField.from_function(grid_1d, np.sin)


@pytest.fixture(scope="function")
def desk_params() -> PdeParams:
    return PdeParams(nu=1.0, alpha=0.25, p=2.0, mu=0.5, lam=1.0, dim=1)
