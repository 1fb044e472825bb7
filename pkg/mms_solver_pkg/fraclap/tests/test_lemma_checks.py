from itertools import product

import numpy as np
import pytest

from ..frac_order import FracOrder, interpolation_constant
from ..frac_order import transfer_constant
from ..lemma_check_funcs import check_interpolation_bound
from ..lemma_check_funcs import check_modulus_transfer, modulus_transfer
from ..quadrature_error import QuadratureError
from ...fields import TorusField, TorusGrid
from ...modulus.modulus import Modulus, omega_base


@pytest.mark.fraclap
class TestInterpolationBound:
    def test_sine(self, grid_1d: TorusGrid, order_1d: FracOrder):
        field = TorusField.from_function(grid_1d, np.sin)
        report = check_interpolation_bound(field, order_1d)
        assert report.lhs == pytest.approx(1.0, abs=1e-12)
        assert report.rhs == pytest.approx(interpolation_constant(order_1d))
        assert report.rhs >= 1
        assert report.passed and report.margin > 0

    @pytest.mark.parametrize("scale", [1e-3, 0.5, 7.0])
    def test_homogeneous(self,
                         grid_1d: TorusGrid,
                         order_1d: FracOrder,
                         scale: float):
        base = TorusField.from_function(grid_1d, np.sin)
        unit = check_interpolation_bound(base, order_1d)
        scaled = check_interpolation_bound(scale * base, order_1d)
        assert scaled.lhs == pytest.approx(scale * unit.lhs, rel=1e-10)
        assert scaled.rhs == pytest.approx(scale * unit.rhs, rel=1e-10)

    @pytest.mark.parametrize("dim,alpha",
                             product([1, 2], [0.1, 0.25, 0.4]))
    def test_random_sweep(self, dim: int, alpha: float):
        grid = TorusGrid(dim=dim, points_per_axis=64 if dim == 1 else 16)
        order = FracOrder(alpha, dim)
        for seed in range(100):
            field = TorusField.random_band_limited(grid, 5, seed)
            report = check_interpolation_bound(field, order)
            assert report.passed, f"seed {seed}: {report}"

    def test_constant_field(self, grid_1d: TorusGrid, order_1d: FracOrder):
        report = check_interpolation_bound(
            TorusField.constant(grid_1d, 1.5), order_1d)
        assert report.passed


@pytest.mark.fraclap
class TestModulusTransfer:
    @pytest.mark.parametrize("alpha", [0.1, 0.25, 0.4])
    def test_linear_closed_form(self, alpha: float):
        """omega = xi gives K xi^{1-2a} / (1-2a)"""

        order = FracOrder(alpha, 1)
        transferred = modulus_transfer(Modulus.linear(), order)
        xis = np.array([0.01, 0.1, 0.5, 1.0, 2.0, 5.0])
        closed = (transfer_constant(order) * xis ** (1 - 2 * alpha)
                  / (1 - 2 * alpha))
        assert np.allclose(transferred(xis), closed, rtol=1e-8, atol=0)

    def test_zero_modulus(self, order_1d: FracOrder):
        transferred = modulus_transfer(Modulus.zero(), order_1d)
        assert np.all(transferred(np.array([0.0, 0.3, 4.0])) == 0)

    def test_value_at_zero(self, order_1d: FracOrder):
        transferred = modulus_transfer(omega_base(0.25), order_1d)
        assert transferred(0.0) == 0.0

    @pytest.mark.parametrize("alpha,scale", product([0.1, 0.25, 0.4],
                                                   [1.0, 8.0]))
    def test_base_finite_and_nondecreasing(self, alpha: float, scale: float):
        order = FracOrder(alpha, 1)
        omega = omega_base(alpha).rescaled(scale)
        transferred = modulus_transfer(omega, order)
        xis = np.geomspace(1e-6, 1e3, 60)
        values = transferred(xis)
        assert np.all(np.isfinite(values))
        assert np.all(np.diff(values) >= 0)

    def test_call_order_independent(self, order_1d: FracOrder):
        """Chained cache gives the same values in any call order"""

        xis = np.array([3.0, 0.2, 1.1, 0.05])
        forward = modulus_transfer(omega_base(0.25), order_1d)(xis)
        fresh = modulus_transfer(omega_base(0.25), order_1d)
        backward = np.array([float(fresh(x)) for x in xis[::-1]])[::-1]
        assert np.allclose(forward, backward, rtol=1e-10)

    def test_derivative_consistent(self, order_1d: FracOrder):
        transferred = modulus_transfer(omega_base(0.25), order_1d)
        step = 1e-5
        for xi in (0.3, 1.0, 4.0):
            difference = (transferred(xi + step)
                          - transferred(xi - step)) / (2 * step)
            assert float(difference) == pytest.approx(
                float(transferred.first(xi)), rel=1e-6)

    def test_rejects_supercritical(self):
        with pytest.raises(ValueError):
            modulus_transfer(Modulus.linear(),
                             FracOrder(0.75, 1, supercritical=True))

    def test_rejects_negative_argument(self, order_1d: FracOrder):
        with pytest.raises(ValueError):
            modulus_transfer(Modulus.linear(), order_1d)(np.array([-1.0]))

    def test_quadrature_error_type(self):
        assert issubclass(QuadratureError, Exception)


@pytest.mark.fraclap
class TestCheckModulusTransfer:
    def test_constant_field(self, grid_1d: TorusGrid, order_1d: FracOrder):
        report = check_modulus_transfer(TorusField.constant(grid_1d, 2.0),
                                        Modulus.linear(), order_1d, 500)
        assert report.lhs < 1e-12
        assert report.passed

    @pytest.mark.parametrize("alpha", [0.1, 0.25, 0.4])
    def test_small_sine_linear_modulus(self,
                                       grid_1d: TorusGrid,
                                       alpha: float):
        field = 0.5 * TorusField.from_function(grid_1d, np.sin)
        report = check_modulus_transfer(field, Modulus.linear(),
                                        FracOrder(alpha, 1), 2000, seed=3)
        assert report.passed
        assert report.margin > 0
        assert report.detail["violations"] == 0

    def test_two_dim(self, grid_2d: TorusGrid, order_2d: FracOrder):
        field = 0.3 * TorusField.from_modes(grid_2d, [(1.0, (1, 1), 0.0)])
        report = check_modulus_transfer(field, Modulus.linear(), order_2d,
                                        1000)
        assert report.passed
