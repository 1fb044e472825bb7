from math import inf, pi

import pytest

from ..solver_config import SolverConfig, max_stable_dt
from ...fields import TorusGrid
from ...picard import PdeParams


@pytest.mark.evolve
class TestSolverConfig:
    def test_steps_land_on_t_end(self, grid_32: TorusGrid,
                                 desk_params: PdeParams):
        config = SolverConfig(desk_params, grid_32, dt=0.3, t_end=1.0)
        assert config.steps == 4
        assert config.dt == 0.25

    def test_exact_division_keeps_dt(self, grid_32: TorusGrid,
                                     desk_params: PdeParams):
        config = SolverConfig(desk_params, grid_32, dt=1e-3, t_end=0.5)
        assert config.steps == 500
        assert config.dt == pytest.approx(1e-3, rel=1e-14)

    @pytest.mark.parametrize("p, expected", [(2.0, True),
                                             (3.0, True),
                                             (1.5, False),
                                             (4.0, False)])
    def test_automatic_dealiasing(self, grid_32: TorusGrid,
                                  desk_params: PdeParams,
                                  p: float, expected: bool):
        config = SolverConfig(desk_params.replace(p=p), grid_32)
        assert config.dealias is expected

    def test_explicit_dealiasing_wins(self, grid_32: TorusGrid,
                                      desk_params: PdeParams):
        assert not SolverConfig(desk_params, grid_32, dealias=False).dealias

    @pytest.mark.parametrize("kwargs", [{"dt": 0.0},
                                        {"t_end": -1.0},
                                        {"record_every": 0},
                                        {"pair_samples": 0},
                                        {"holder_beta": 1.0}])
    def test_rejects_bad_values(self, grid_32: TorusGrid,
                                desk_params: PdeParams, kwargs):
        with pytest.raises(ValueError):
            SolverConfig(desk_params, grid_32, **kwargs)

    def test_rejects_dim_mismatch(self, desk_params: PdeParams):
        grid = TorusGrid(dim=2, period=2 * pi, points_per_axis=16)
        with pytest.raises(ValueError):
            SolverConfig(desk_params, grid)


@pytest.mark.evolve
class TestMaxStableDt:
    def test_linear_is_unbounded(self, grid_32: TorusGrid,
                                 linear_params: PdeParams):
        config = SolverConfig(linear_params, grid_32)
        assert max_stable_dt(config, 10.0) == inf

    def test_flat_data_is_unbounded(self, grid_32: TorusGrid,
                                    desk_params: PdeParams):
        config = SolverConfig(desk_params, grid_32)
        assert max_stable_dt(config, 0.0) == inf

    def test_value(self, grid_32: TorusGrid, desk_params: PdeParams):
        config = SolverConfig(desk_params, grid_32)
        # 1 / (2 p |lambda| lip k_max) with k_max = 16
        assert max_stable_dt(config, 1.0) == pytest.approx(1 / 64)
