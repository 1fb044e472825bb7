from typing import Optional

import numpy as np
from scipy.integrate import cumulative_trapezoid, quad, trapezoid

from ..fraclap.quadrature_error import QuadratureError


class GronwallInstance:
    """Data of the Gronwall-type inequality

        g(t) <= int_T1^t f(t - s) g(s) ds + C0

    f is sampled on [0, T2 - T1] and g on [T1, T2], both on the same
    uniform spacing. f may be infinite at 0 if the exact cumulative
    int_0^sigma |f|^r is supplied."""

    def __init__(self,
                 q: float,
                 C0: float,
                 times: np.ndarray,
                 f: np.ndarray,
                 g: Optional[np.ndarray] = None,
                 f_power_cumulative: Optional[np.ndarray] = None):

        if q < 1:
            raise ValueError(f"q must be >= 1, got {q}")
        if C0 < 0:
            raise ValueError(f"C0 must be nonnegative, got {C0}")
        times = np.asarray(times, dtype=float)
        f = np.asarray(f, dtype=float)
        if len(times) < 2 or f.shape != times.shape:
            raise ValueError("f must be sampled on the time grid")
        steps = np.diff(times)
        if np.max(np.abs(steps - steps[0])) > 1e-9 * steps[0]:
            raise ValueError("time grid must be uniform")
        if np.any(f < 0):
            raise ValueError("f must be nonnegative")
        if g is not None:
            g = np.asarray(g, dtype=float)
            assert g.shape == times.shape, "g must be sampled on the grid"
            if np.any(g < 0):
                raise ValueError("g must be nonnegative")

        self.q: float = float(q)
        # Conjugate exponent, r = inf for q = 1
        self.r: float = np.inf if q == 1 else q / (q - 1)
        self.C0: float = float(C0)
        self.times: np.ndarray = times
        self.f: np.ndarray = f
        self.g: Optional[np.ndarray] = g

        if f_power_cumulative is None:
            f_power_cumulative = self._cumulative_power(f)
        # F(sigma) = int_0^sigma |f|^r, or the running sup for r = inf
        self.F: np.ndarray = np.asarray(f_power_cumulative, dtype=float)
        self.h: np.ndarray = self._exponent()

    @property
    def T1(self) -> float:
        return float(self.times[0])

    @property
    def T2(self) -> float:
        return float(self.times[-1])

    def _cumulative_power(self, f: np.ndarray) -> np.ndarray:
        if not np.all(np.isfinite(f)):
            raise ValueError("singular f needs f_power_cumulative")
        sigma = self.times - self.T1
        if np.isinf(self.r):
            return np.maximum.accumulate(f)
        return cumulative_trapezoid(f ** self.r, sigma, initial=0)

    def _f_norm(self) -> np.ndarray:
        """|f|_{L^r(0, sigma)} on the grid"""

        if np.isinf(self.r):
            return self.F
        return self.F ** (1 / self.r)

    def _exponent(self) -> np.ndarray:
        """h(t) = 2^q int_T1^t |f|_{L^r(0, s - T1)}^q ds"""

        return (2 ** self.q
                * cumulative_trapezoid(self._f_norm() ** self.q, self.times,
                                       initial=0))


def gronwall_bound(instance: GronwallInstance, t: float) -> float:
    """C0 [2 |f|_{L^r(0, t-T1)} (int_T1^t e^{h(t)-h(s)} ds)^{1/q} + 1]"""

    times = instance.times
    if not instance.T1 <= t <= instance.T2 * (1 + 1e-12):
        raise ValueError(f"t={t} outside [{instance.T1}, {instance.T2}]")
    t = min(t, instance.T2)
    norm = float(np.interp(t, times, instance._f_norm()))
    h_t = float(np.interp(t, times, instance.h))

    inside = times < t
    nodes = np.append(times[inside], t)
    exponents = np.append(instance.h[inside], h_t)
    if len(nodes) < 2:
        return instance.C0
    # Large exponents overflow to an infinite, still valid, bound
    with np.errstate(over="ignore", invalid="ignore"):
        growth = trapezoid(np.exp(h_t - exponents), nodes)
        return float(instance.C0 * (2 * norm * growth ** (1 / instance.q)
                                    + 1))


def premise_equality_solution(instance: GronwallInstance) -> np.ndarray:
    """g with g(t_n) = dt sum_{i<n} f(t_n - t_i) g(t_i) + C0

    For f nonincreasing the left rectangle sum underestimates the
    integral of the increasing piecewise linear g, so g satisfies the
    premise of the inequality"""

    times = instance.times
    dt = times[1] - times[0]
    g = np.zeros(len(times))
    for n in range(len(times)):
        lags = n - np.arange(n)
        g[n] = dt * np.sum(instance.f[lags] * g[:n]) + instance.C0
    return g


def continuous_dependence_instance(A: float,
                                   nu: float,
                                   T1: float,
                                   T2: float,
                                   n: int,
                                   C0: float = 1.0) -> GronwallInstance:
    """f(sigma) = A ((nu sigma)^{-1/2} + 1) with q = 3, r = 3/2

    The cumulative int_0^sigma f^{3/2} is integrated exactly by adaptive
    quadrature so the sigma^{-3/4} singularity is resolved"""

    if not T2 > T1:
        raise ValueError(f"need T2 > T1, got [{T1}, {T2}]")
    times = np.linspace(T1, T2, n + 1)
    sigma = times - T1
    with np.errstate(divide="ignore"):
        f = A * ((nu * sigma) ** -0.5 + 1)

    def power(s: float) -> float:
        return float((A * ((nu * s) ** -0.5 + 1)) ** 1.5)

    cumulative = np.zeros(len(sigma))
    for i in range(1, len(sigma)):
        value, error = quad(power, sigma[i - 1], sigma[i], limit=200)
        if error > 1e-8 * max(value, 1e-300) + 1e-14:
            raise QuadratureError(f"kernel power integral on"
                                  f" [{sigma[i - 1]}, {sigma[i]}] failed")
        cumulative[i] = cumulative[i - 1] + value
    return GronwallInstance(3.0, C0, times, f, f_power_cumulative=cumulative)


__all__ = ["GronwallInstance",
           "gronwall_bound",
           "premise_equality_solution",
           "continuous_dependence_instance"]
