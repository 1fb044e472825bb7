from itertools import product
from math import log2, pi, sqrt

import numpy as np
import pytest

from ..torus_field import TorusField
from ..torus_grid import TorusGrid


@pytest.mark.fields
class TestTorusField:
    def test_values_frozen(self, grid_1d: TorusGrid):
        field = TorusField.from_function(grid_1d, np.sin)
        with pytest.raises(ValueError):
            field.values[0] = 1.0

    def test_rejects_non_finite(self, grid_1d: TorusGrid):
        values = np.zeros(grid_1d.shape)
        values[3] = np.nan
        with pytest.raises(ValueError):
            TorusField(grid_1d, values)

    @pytest.mark.parametrize("dim,seed", product([1, 2], [0, 1, 2]))
    def test_round_trip(self, dim: int, seed: int):
        """spectral -> physical -> spectral is exact to 1e-12"""

        grid = TorusGrid(dim=dim, points_per_axis=64)
        field = TorusField.random_band_limited(grid, 6, seed)
        again = TorusField.from_spectral(grid, field.spectral)
        assert np.max(np.abs(again.values - field.values)) < 1e-12
        assert np.max(np.abs(again.spectral - field.spectral)) < (
            1e-12 * np.max(np.abs(field.spectral)))

    def test_conjugate_symmetry(self, grid_2d: TorusGrid):
        field = TorusField.random_band_limited(grid_2d, 4, 7)
        coeffs = field.spectral
        n = grid_2d.points_per_axis
        index = (-np.arange(n)) % n
        mirrored = np.conj(coeffs[np.ix_(index, index)])
        assert np.allclose(coeffs, mirrored, atol=1e-10)

    def test_from_modes(self, grid_2d: TorusGrid):
        field = TorusField.from_modes(grid_2d, [(2.0, (1, 0), 0.0)])
        x, _ = grid_2d.coordinates
        assert np.allclose(field.values, 2 * np.sin(x))

    def test_arithmetic(self, grid_1d: TorusGrid):
        field = TorusField.from_function(grid_1d, np.sin)
        doubled = 2 * field - field + field
        assert np.allclose(doubled.values, 2 * field.values)
        assert np.allclose((field + 1.0).values, field.values + 1)
        assert np.allclose((-field).values, -field.values)

    def test_different_grids_rejected(self, grid_1d: TorusGrid,
                                      small_grid_1d: TorusGrid):
        with pytest.raises(ValueError):
            (TorusField.constant(grid_1d)
             + TorusField.constant(small_grid_1d))


@pytest.mark.fields
class TestDerivativeFuncs:
    def test_gradient_of_sine(self, grid_1d: TorusGrid):
        """d/dx sin = cos, exact for band-limited fields"""

        field = TorusField.from_function(grid_1d, np.sin)
        (derivative,) = field.gradient()
        x, = grid_1d.coordinates
        assert np.max(np.abs(derivative.values - np.cos(x))) <= 1e-10

    def test_gradient_of_constant(self, grid_2d: TorusGrid):
        field = TorusField.constant(grid_2d, 3.5)
        for component in field.gradient():
            assert np.max(np.abs(component.values)) < 1e-12

    def test_gradient_finite_difference_order(self):
        """Centered differences converge to the spectral derivative at
        second order"""

        errors = []
        for n in (32, 64):
            grid = TorusGrid(dim=2, points_per_axis=n)
            field = TorusField.from_function(
                grid, lambda x, y: np.sin(3 * x) * np.cos(2 * y))
            exact = field.gradient()[0].values
            h = grid.spacing
            centered = (np.roll(field.values, -1, axis=0)
                        - np.roll(field.values, 1, axis=0)) / (2 * h)
            errors.append(np.max(np.abs(centered - exact)))
            x, y = grid.coordinates
            assert np.allclose(exact, 3 * np.cos(3 * x) * np.cos(2 * y),
                               atol=1e-10)
        assert log2(errors[0] / errors[1]) >= 1.9

    def test_gradient_linear(self, grid_2d: TorusGrid):
        first = TorusField.random_band_limited(grid_2d, 5, 1)
        second = TorusField.random_band_limited(grid_2d, 5, 2)
        combined = (2.5 * first + (-0.5) * second).gradient()
        for c, a, b in zip(combined, first.gradient(), second.gradient()):
            expected = 2.5 * a.values - 0.5 * b.values
            assert np.max(np.abs(c.values - expected)) < 1e-12 * 10

    def test_gradient_translation_equivariant(self, grid_1d: TorusGrid):
        field = TorusField.random_band_limited(grid_1d, 8, 3)
        shifted = field.shift(1).gradient()[0].values
        expected = field.gradient()[0].shift(1).values
        assert np.max(np.abs(shifted - expected)) < 1e-12

    def test_linf_norm(self, grid_1d: TorusGrid):
        assert TorusField.constant(grid_1d).linf_norm() == 0
        sine = TorusField.from_function(grid_1d, np.sin)
        assert sine.linf_norm() == pytest.approx(1, abs=1e-2)
        assert (sine + 2.0).linf_norm() == pytest.approx(3, abs=1e-2)

    def test_linf_norm_odd_grid_sampling(self):
        """N = 8 misses nothing, N = 16 too, both within 1e-2"""

        grid = TorusGrid(dim=1, points_per_axis=8)
        field = TorusField.from_function(grid, np.sin)
        assert field.linf_norm() == pytest.approx(1, abs=1e-2)

    def test_lipschitz_estimate(self, grid_1d: TorusGrid, grid_2d: TorusGrid):
        assert TorusField.constant(grid_1d, 2.0).lipschitz_estimate() < 1e-12
        sine = TorusField.from_function(grid_1d, np.sin)
        assert sine.lipschitz_estimate() == pytest.approx(1, abs=1e-2)
        plane = TorusField.from_function(grid_2d,
                                         lambda x, y: np.sin(x) + np.sin(y))
        assert plane.lipschitz_estimate() == pytest.approx(sqrt(2), abs=1e-2)

    def test_holder_rejects_beta(self, grid_1d: TorusGrid):
        field = TorusField.constant(grid_1d)
        for beta in (0.0, 1.0, -0.2):
            with pytest.raises(ValueError):
                field.holder_seminorm(beta, 10)

    def test_holder_zero_field(self, grid_1d: TorusGrid):
        assert TorusField.constant(grid_1d).holder_seminorm(0.5, 100) == 0

    def test_holder_interpolation_bound(self, grid_1d: TorusGrid):
        sine = TorusField.from_function(grid_1d, np.sin)
        value = sine.holder_seminorm(0.5, 1000)
        bound = sine.lipschitz_estimate() * (grid_1d.max_separation) ** 0.5
        assert 0 <= value <= bound

    def test_holder_matches_exhaustive(self, small_grid_1d: TorusGrid):
        """10^4 random pairs recover the all pairs value within 5%"""

        sine = TorusField.from_function(small_grid_1d, np.sin)
        sampled = sine.holder_seminorm(0.5, 10 ** 4, seed=0)

        derivative = sine.gradient()[0].values
        n = small_grid_1d.points_per_axis
        i, j = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
        off = i != j
        offsets = (i - j)[off][:, None]
        distances = small_grid_1d.torus_distance(offsets)
        jumps = np.abs(derivative[i[off]] - derivative[j[off]])
        exhaustive = np.max(jumps / distances ** 0.5)
        assert sampled == pytest.approx(exhaustive, rel=0.05)

    def test_holder_near_one_below_lipschitz(self, grid_1d: TorusGrid):
        sine = TorusField.from_function(grid_1d, np.sin)
        value = sine.holder_seminorm(0.99, 5000)
        assert value <= sine.lipschitz_estimate() * (1 + 1e-2)

    def test_period_scaling(self):
        """Same samples on a doubled period halve the derivative"""

        short = TorusGrid(dim=1, period=2 * pi, points_per_axis=64)
        long = TorusGrid(dim=1, period=4 * pi, points_per_axis=64)
        a = TorusField.from_function(short, np.sin)
        b = TorusField(long, a.values)
        assert b.lipschitz_estimate() == pytest.approx(
            a.lipschitz_estimate() / 2)
