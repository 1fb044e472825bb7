from math import exp

import numpy as np
import pytest

from ..breakthrough_funcs import breakthrough_scan
from ..modulus import omega_base
from ..time_modulus import TimeModulus
from ...fields import PairBatch, PairSample, TorusField, TorusGrid
from ...fields import near_diagonal_pairs, sample_pairs


@pytest.fixture(scope="function")
def tm() -> TimeModulus:
    return TimeModulus(omega_base(0.25), B=20.0, C0=0.3)


def _straddling_pairs(grid: TorusGrid, center: int, reach: int):
    pairs = []
    for j in range(1, reach + 1):
        separation = float(grid.torus_distance(np.array([2 * j])))
        pairs.append(PairSample((center + j,), (center - j,), separation,
                                grid.spacing))
    return pairs


@pytest.mark.modulus
class TestTimeModulus:
    def test_monotone_in_time(self, tm: TimeModulus):
        xis = np.logspace(-6, 2, 50)
        values = [tm.value(t, xis) for t in (0.0, 0.5, 1.0, 4.0)]
        assert all(np.all(later >= earlier)
                   for earlier, later in zip(values, values[1:]))

    def test_gradient_bound(self, tm: TimeModulus):
        assert tm.gradient_bound(0.0) == 20.0
        assert tm.gradient_bound(2.0) == pytest.approx(20 * exp(0.6))
        assert tm.first(2.0, 1e-12) == pytest.approx(tm.gradient_bound(2.0),
                                                     rel=1e-6)

    def test_strong_at_each_time(self, tm: TimeModulus):
        snapshot = tm.at_time(1.0)
        assert snapshot.strong
        assert snapshot(0.3) == pytest.approx(float(tm.value(1.0, 0.3)))
        assert snapshot.derivative_at_zero == pytest.approx(
            tm.gradient_bound(1.0))

    def test_time_derivative(self, tm: TimeModulus):
        assert tm.time_derivative(1.0, 0.5) == pytest.approx(
            0.3 * float(tm.value(1.0, 0.5)))

    def test_overflow_is_infinite(self):
        tm = TimeModulus(omega_base(0.25), B=2.0, C0=100.0)
        assert tm.gradient_bound(10.0) == np.inf

    @pytest.mark.parametrize("B, C0", [(0.0, 1.0), (1.0, -1.0)])
    def test_rejects_constants(self, B: float, C0: float):
        with pytest.raises(ValueError):
            TimeModulus(omega_base(0.25), B, C0)


@pytest.mark.modulus
class TestBreakthroughScan:
    def test_zero_data(self, grid_1d: TorusGrid, tm: TimeModulus):
        pairs = sample_pairs(grid_1d, 500, seed=3)
        report = breakthrough_scan(TorusField.constant(grid_1d), tm, 0.5,
                                   pairs)
        assert not report.found
        smallest = min(float(tm.value(0.5, p.separation)) for p in pairs)
        assert report.worst_margin == pytest.approx(smallest, rel=1e-14)
        assert report.time == 0.5

    def test_touching_profile(self, grid_1d: TorusGrid, tm: TimeModulus):
        t, center = 0.7, 128
        x = grid_1d.coordinates[0]
        offset = x - x[center]
        values = (1 + 1e-9) * np.sign(offset) * tm.value(
            t, 2 * np.abs(offset)) / 2
        theta = TorusField(grid_1d, values)
        pairs = (_straddling_pairs(grid_1d, center, 5)
                 + near_diagonal_pairs(grid_1d, max_cells=1)[:50])
        report = breakthrough_scan(theta, tm, t, pairs)
        assert report.found
        assert report.worst_margin <= 0
        worst = report.worst_pair
        assert min(worst.x[0], worst.y[0]) < center < max(worst.x[0],
                                                         worst.y[0])
        recomputed = (float(tm.value(t, worst.separation))
                      - abs(values[worst.x] - values[worst.y]))
        assert report.worst_margin == pytest.approx(recomputed, abs=1e-12)

    def test_batch_matches_list(self, grid_1d: TorusGrid, sine: TorusField,
                                tm: TimeModulus):
        pairs = sample_pairs(grid_1d, 300, seed=1)
        listed = breakthrough_scan(sine, tm, 0.0, pairs)
        batched = tm.scan(sine, 0.0, PairBatch(grid_1d, pairs))
        assert listed.worst_margin == batched.worst_margin
        assert listed.worst_pair == batched.worst_pair
        assert not batched.found

    def test_empty_pairs(self, sine: TorusField, tm: TimeModulus):
        with pytest.raises(ValueError):
            breakthrough_scan(sine, tm, 0.0, [])
