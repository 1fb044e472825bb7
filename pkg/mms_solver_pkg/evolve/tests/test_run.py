import logging
from math import exp, isnan
from unittest.mock import patch

import numpy as np
import pytest

from ..integration import run, step
from ..monitors import growth_exponent, linear_lipschitz
from ..pseudo_spectral_solver import PseudoSpectralSolver
from ..run_report import RunReport
from ..solver_config import SolverConfig
from ..solver_overflow_error import SolverOverflowError
from ..stop_reason import StopReason
from ...fields import TorusField, TorusGrid
from ...picard import PdeParams


@pytest.mark.evolve
class TestRun:
    def test_records(self, grid_32: TorusGrid, desk_params: PdeParams,
                     sine_32: TorusField):
        config = SolverConfig(desk_params, grid_32, dt=0.01, t_end=0.25,
                              record_every=10)
        report = run(sine_32, config)
        assert report.completed
        # Steps 0, 10, 20 and the final step 25
        assert report.times == pytest.approx([0.0, 0.1, 0.2, 0.25])
        assert report.states == []
        assert all(isnan(value) for value in report.theory_bound)

    def test_rows(self, grid_32: TorusGrid, desk_params: PdeParams,
                  sine_32: TorusField):
        config = SolverConfig(desk_params, grid_32, dt=0.01, t_end=0.1)
        rows = list(run(sine_32, config).rows())
        assert len(rows) == 2
        assert tuple(rows[0]) == RunReport.columns
        assert rows[0]["t"] == 0.0
        assert rows[0]["lip"] == pytest.approx(1.0, rel=1e-12)

    def test_linear_mode_decay(self, grid_256: TorusGrid,
                               linear_params: PdeParams,
                               sine_256: TorusField):
        config = SolverConfig(linear_params, grid_256, dt=1e-2, t_end=1.0)
        report = run(sine_256, config)
        expected = linear_lipschitz(linear_params, 1.0, 1.0)
        assert expected == pytest.approx(exp(-0.5))
        assert report.lip[-1] == pytest.approx(expected, rel=1e-6)
        assert growth_exponent(report) == pytest.approx(-0.5, abs=1e-6)

    @pytest.mark.parametrize("lam", [1.0, -1.0])
    def test_hamilton_jacobi_gradient_maximum(self, grid_256: TorusGrid,
                                              sine_256: TorusField,
                                              lam: float):
        params = PdeParams(nu=1.0, alpha=0.25, p=2.0, mu=0.0, lam=lam)
        config = SolverConfig(params, grid_256, dt=1e-3, t_end=0.5)
        report = run(sine_256, config)
        assert report.completed
        lips = report.lip
        assert all(later <= earlier * (1 + 1e-3)
                   for earlier, later in zip(lips, lips[1:]))

    def test_overflow(self, grid_32: TorusGrid, desk_params: PdeParams):
        theta = TorusField.constant(grid_32, 1e13)
        config = SolverConfig(desk_params, grid_32, dt=0.01, t_end=0.1)
        with pytest.raises(SolverOverflowError) as error:
            step(theta, config)
        assert not error.value.non_finite
        report = run(theta, config)
        assert report.stopped_reason == StopReason.OVERFLOW
        assert len(report) == 1

    def test_nan(self, grid_32: TorusGrid, desk_params: PdeParams,
                 sine_32: TorusField):
        config = SolverConfig(desk_params, grid_32, dt=0.01, t_end=0.1)

        def poisoned(self, spectral, t):
            return np.full(spectral.shape, np.nan, dtype=complex)

        with patch.object(PseudoSpectralSolver, "_nonlinear", poisoned):
            report = run(sine_32, config)
        assert report.stopped_reason == StopReason.NAN
        assert not report.completed

    def test_gradient_threshold(self, grid_32: TorusGrid,
                                desk_params: PdeParams,
                                sine_32: TorusField):
        config = SolverConfig(desk_params, grid_32, dt=0.01, t_end=0.1,
                              gradient_threshold=0.5)
        report = run(sine_32, config)
        assert report.stopped_reason == StopReason.GRADIENT_THRESHOLD
        assert len(report) == 1

    def test_unstable_dt_warns_once(self, grid_32: TorusGrid,
                                    desk_params: PdeParams,
                                    sine_32: TorusField, caplog):
        config = SolverConfig(desk_params, grid_32, dt=0.05, t_end=0.5,
                              record_every=1)
        with caplog.at_level(logging.WARNING):
            run(sine_32, config)
        warnings = [record for record in caplog.records
                    if "stability bound" in record.getMessage()]
        assert len(warnings) == 1

    def test_stable_dt_is_quiet(self, grid_32: TorusGrid,
                                desk_params: PdeParams,
                                sine_32: TorusField, caplog):
        config = SolverConfig(desk_params, grid_32, dt=1e-3, t_end=0.05)
        with caplog.at_level(logging.WARNING):
            run(sine_32, config)
        assert not any("stability bound" in record.getMessage()
                       for record in caplog.records)

    def test_holder_column(self, grid_32: TorusGrid, desk_params: PdeParams,
                           sine_32: TorusField):
        config = SolverConfig(desk_params, grid_32, dt=0.01, t_end=0.1,
                              holder_beta=0.5, holder_samples=500)
        report = run(sine_32, config)
        assert all(value > 0 for value in report.holder)
