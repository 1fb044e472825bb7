from math import pi

import pytest

from ..heat_kernel_params import HeatKernelParams
from ...fields import TorusGrid


@pytest.fixture(scope="function")
def params_1d() -> HeatKernelParams:
    return HeatKernelParams(nu=1.0, dim=1)


@pytest.fixture(scope="function")
def params_2d() -> HeatKernelParams:
    return HeatKernelParams(nu=0.5, dim=2)


@pytest.fixture(scope="function")
def grid_1d() -> TorusGrid:
    return TorusGrid(dim=1, period=2 * pi, points_per_axis=64)


@pytest.fixture(scope="function")
def grid_2d() -> TorusGrid:
    return TorusGrid(dim=2, period=2 * pi, points_per_axis=32)
