import numpy as np
import pytest

from ..gronwall import GronwallInstance, continuous_dependence_instance
from ..gronwall import gronwall_bound, premise_equality_solution


def _constant_instance(value: float, C0: float = 1.0,
                       n: int = 200) -> GronwallInstance:
    times = np.linspace(0.0, 1.0, n + 1)
    return GronwallInstance(3.0, C0, times, np.full(n + 1, value))


@pytest.mark.heatkernel
class TestGronwall:
    def test_zero_kernel(self):
        instance = _constant_instance(0.0, C0=2.5)
        for t in (0.0, 0.3, 1.0):
            assert gronwall_bound(instance, t) == pytest.approx(2.5)

    def test_constant_kernel_exponential(self):
        """g = C0 e^{a t} satisfies the premise with equality"""

        instance = _constant_instance(1.0)
        for t in np.linspace(0.0, 1.0, 11):
            assert np.exp(t) <= gronwall_bound(instance, t)

    def test_conjugate_exponent(self):
        assert _constant_instance(1.0).r == pytest.approx(1.5)

    def test_continuous_dependence_instance(self):
        instance = continuous_dependence_instance(A=1.0, nu=1.0, T1=0.0,
                                                  T2=1.0, n=200)
        bounds = [gronwall_bound(instance, t) for t in instance.times]
        assert np.all(np.isfinite(bounds))
        assert np.all(np.diff(bounds) >= -1e-12)
        assert np.isinf(instance.f[0])

    def test_exact_cumulative(self):
        """int_0^sigma ((s)^{-1/2} + 1)^{3/2} for A = nu = 1 at sigma = 1"""

        from scipy.integrate import quad

        instance = continuous_dependence_instance(1.0, 1.0, 0.0, 1.0, 10)
        expected, _ = quad(lambda s: (s ** -0.5 + 1) ** 1.5, 0, 1)
        assert instance.F[-1] == pytest.approx(expected, rel=1e-8)

    @pytest.mark.parametrize("A", [0.1, 1.0, 3.0])
    def test_premise_implies_bound(self, A: float):
        instance = continuous_dependence_instance(A, 1.0, 0.0, 0.5, 100)
        g = premise_equality_solution(instance)
        bounds = np.array([gronwall_bound(instance, t)
                           for t in instance.times])
        assert np.all(g <= bounds * (1 + 1e-9))

    def test_premise_constant_kernel(self):
        instance = _constant_instance(2.0)
        g = premise_equality_solution(instance)
        assert np.all(np.diff(g) >= 0)
        bounds = np.array([gronwall_bound(instance, t)
                           for t in instance.times])
        assert np.all(g <= bounds)

    def test_monotone_in_C0(self):
        low = _constant_instance(1.0, C0=1.0)
        high = _constant_instance(1.0, C0=2.0)
        assert gronwall_bound(low, 0.7) <= gronwall_bound(high, 0.7)

    def test_q_one(self):
        times = np.linspace(0.0, 1.0, 51)
        instance = GronwallInstance(1.0, 1.0, times, np.full(51, 0.5))
        assert np.isinf(instance.r)
        assert np.exp(0.5) <= gronwall_bound(instance, 1.0)

    def test_rejects_outside_range(self):
        with pytest.raises(ValueError):
            gronwall_bound(_constant_instance(1.0), 1.5)

    def test_rejects_bad_input(self):
        times = np.linspace(0.0, 1.0, 5)
        with pytest.raises(ValueError):
            GronwallInstance(0.5, 1.0, times, np.ones(5))
        with pytest.raises(ValueError):
            GronwallInstance(2.0, 1.0, np.array([0.0, 0.1, 0.5]),
                             np.ones(3))
        with pytest.raises(ValueError):
            GronwallInstance(2.0, 1.0, times, -np.ones(5))
        singular = np.ones(5)
        singular[0] = np.inf
        with pytest.raises(ValueError):
            GronwallInstance(2.0, 1.0, times, singular)
