"""Second order exponential time differencing (ETD2RK)

With L the diagonal linear symbol -nu |k|^2 + mu |k|^{2a} and N the
nonlinear term, one step of size h is

    a       = e^{Lh} u + h phi1(Lh) N(u, t)
    u_next  = a + h phi2(Lh) (N(a, t + h) - N(u, t))

phi1(z) = (e^z - 1) / z and phi2(z) = (e^z - 1 - z) / z^2.
"""

from typing import Tuple

import numpy as np

from .solver_overflow_error import SolverOverflowError
from ..fields import TorusField

# Below this |z| the phi functions use their Taylor series
TAYLOR_RADIUS = 1e-3


def phi_functions(z: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """phi1 and phi2, cancellation free near z = 0"""

    z = np.asarray(z, dtype=float)
    small = np.abs(z) < TAYLOR_RADIUS
    safe = np.where(small, 1.0, z)
    em1 = np.expm1(safe)
    phi1 = np.where(small, 1 + z / 2 + z ** 2 / 6 + z ** 3 / 24,
                    em1 / safe)
    phi2 = np.where(small, 0.5 + z / 6 + z ** 2 / 24 + z ** 3 / 120,
                    (em1 - safe) / safe ** 2)
    return phi1, phi2


def linear_symbol(self) -> np.ndarray:
    """-nu |k|^2 + mu |k|^{2a} on the spectral grid"""

    params = self.config.params
    k_squared = self.config.grid.k_squared
    return -params.nu * k_squared + params.mu * k_squared ** params.alpha


def _check_values(self, values: np.ndarray, t: float):
    if not np.all(np.isfinite(values)):
        raise SolverOverflowError(f"non-finite values at t={t:.6g}",
                                  non_finite=True)
    peak = float(np.max(np.abs(values)))
    if peak > self.config.overflow_threshold:
        raise SolverOverflowError(f"|theta| = {peak:.3g} exceeds"
                                  f" {self.config.overflow_threshold:.3g}"
                                  f" at t={t:.6g}")


def _nonlinear(self, spectral: np.ndarray, t: float) -> np.ndarray:
    """Fourier coefficients of lambda |grad theta|^p (+ source)

    The gradient is spectral, the power pointwise. With dealiasing both
    the input and the product are cut to the 2/3 band"""

    config = self.config
    params = config.params
    grid = config.grid
    result = np.zeros(grid.shape, dtype=complex)
    if params.lam != 0:
        if self.dealias_mask is not None:
            spectral = spectral * self.dealias_mask
        squares = np.zeros(grid.shape)
        for k, keep in zip(grid.wavevectors, grid.nyquist_mask):
            component = np.fft.ifftn(1j * k * keep * spectral).real
            squares = squares + component ** 2
        product = np.fft.fftn(squares ** (params.p / 2))
        if self.dealias_mask is not None:
            product = product * self.dealias_mask
        result = result + params.lam * product
    if config.source is not None:
        result = result + config.source(t).spectral
    return result


def step(self, theta: TorusField, t: float = 0.0) -> TorusField:
    """Advances theta from t to t + dt

    Raises SolverOverflowError on non-finite or overflowing values"""

    h = self.config.dt
    u = theta.spectral
    n_start = self._nonlinear(u, t)
    stage = self.propagator * u + self.phi1 * n_start
    self._check_values(np.fft.ifftn(stage).real, t + h)
    n_stage = self._nonlinear(stage, t + h)
    coeffs = stage + self.phi2 * (n_stage - n_start)
    values = np.fft.ifftn(coeffs).real
    self._check_values(values, t + h)
    return TorusField(theta.grid, values)


__all__ = ["phi_functions",
           "linear_symbol",
           "step"]
