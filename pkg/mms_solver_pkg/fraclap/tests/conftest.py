from math import pi

import pytest

from ..frac_order import FracOrder
from ...fields import TorusGrid


@pytest.fixture(scope="function")
def order_1d() -> FracOrder:
    return FracOrder(alpha=0.25, dim=1)


@pytest.fixture(scope="function")
def order_2d() -> FracOrder:
    return FracOrder(alpha=0.25, dim=2)


@pytest.fixture(scope="function")
def grid_1d() -> TorusGrid:
    return TorusGrid(dim=1, period=2 * pi, points_per_axis=256)


@pytest.fixture(scope="function")
def grid_2d() -> TorusGrid:
    return TorusGrid(dim=2, period=2 * pi, points_per_axis=32)
