from math import pi

import pytest

from ..torus_grid import TorusGrid


@pytest.fixture(scope="function")
def grid_1d() -> TorusGrid:
    return TorusGrid(dim=1, period=2 * pi, points_per_axis=256)


@pytest.fixture(scope="function")
def grid_2d() -> TorusGrid:
    return TorusGrid(dim=2, period=2 * pi, points_per_axis=64)


@pytest.fixture(scope="function")
def small_grid_1d() -> TorusGrid:
    return TorusGrid(dim=1, period=2 * pi, points_per_axis=64)
