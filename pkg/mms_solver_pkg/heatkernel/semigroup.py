"""Heat semigroup on the torus and the Duhamel formula

On the torus, convolution with Psi equals convolution with the
periodized kernel, i.e. the Fourier multiplier exp(-nu s |k|^2).
"""

from typing import List, Sequence, Tuple

import numpy as np

from .heat_kernel_params import HeatKernelParams
from ..fields import TorusField, TorusGrid


ForcingHistory = Sequence[Tuple[float, TorusField]]


def heat_multiplier(grid: TorusGrid,
                    params: HeatKernelParams,
                    s: float) -> np.ndarray:
    return np.exp(-params.nu * s * grid.k_squared)


def heat_propagate(field: TorusField,
                   params: HeatKernelParams,
                   s: float) -> TorusField:
    """int Psi(s, x - y) theta(y) dy, spectrally"""

    if s < 0:
        raise ValueError(f"s must be nonnegative, got {s}")
    if field.grid.dim != params.dim:
        raise ValueError(f"grid dim {field.grid.dim} != kernel dim"
                         f" {params.dim}")
    if s == 0:
        return field
    return field.map_spectral(heat_multiplier(field.grid, params, s))


def _check_history(history: ForcingHistory, t0: float, t: float) -> float:
    """Uniform spacing of a history covering [t0, t] exactly"""

    if not t > t0:
        raise ValueError(f"need t > t0, got t={t}, t0={t0}")
    if len(history) < 2:
        raise ValueError("forcing history needs at least two samples")
    times = np.array([time for time, _ in history])
    spacing = (t - t0) / (len(times) - 1)
    expected = t0 + spacing * np.arange(len(times))
    if np.max(np.abs(times - expected)) > 1e-9 * max(1.0, abs(t)):
        raise ValueError("forcing history must sample [t0, t] uniformly"
                         " with both endpoints")
    return spacing


def duhamel_step(state: TorusField,
                 forcing_history: ForcingHistory,
                 params: HeatKernelParams,
                 t: float,
                 t0: float) -> TorusField:
    """e^{(t-t0) nu Lap} state + int_t0^t e^{(t-s) nu Lap} F(s) ds

    The time integral is the trapezoidal rule on the history samples"""

    spacing = _check_history(forcing_history, t0, t)
    grid = state.grid
    total = state.spectral * heat_multiplier(grid, params, t - t0)
    last = len(forcing_history) - 1
    for i, (time, forcing) in enumerate(forcing_history):
        weight = spacing / 2 if i in (0, last) else spacing
        total = total + (weight * forcing.spectral
                         * heat_multiplier(grid, params, t - time))
    return TorusField.from_spectral(grid, total)


def duhamel_trajectory(state: TorusField,
                       forcing_history: ForcingHistory,
                       params: HeatKernelParams) -> List[TorusField]:
    """duhamel_step at every sample time of the history, recursively

    U_n = E(dt) [U_{n-1} + dt/2 F_{n-1}] + dt/2 F_n, which reproduces the
    trapezoidal sums of duhamel_step at linear cost"""

    t0 = forcing_history[0][0]
    t_end = forcing_history[-1][0]
    spacing = _check_history(forcing_history, t0, t_end)
    grid = state.grid
    step = heat_multiplier(grid, params, spacing)

    current = state.spectral.copy()
    trajectory = [state]
    previous = forcing_history[0][1].spectral
    for _, forcing in forcing_history[1:]:
        coeffs = forcing.spectral
        current = step * (current + spacing / 2 * previous)
        current = current + spacing / 2 * coeffs
        trajectory.append(TorusField.from_spectral(grid, current))
        previous = coeffs
    return trajectory


__all__ = ["heat_multiplier",
           "heat_propagate",
           "duhamel_step",
           "duhamel_trajectory"]
