"""The map theta_{k-1} -> theta_k of the Picard iteration

theta_k(t) = e^{t nu Lap} theta0
             + int_0^t e^{(t-s) nu Lap} [lambda |grad theta_{k-1}|^p
                                         + mu (-Lap)^a theta_{k-1}](s) ds
"""

from typing import List, Sequence

import numpy as np

from .pde_params import PdeParams
from ..fields import TorusField
from ..fraclap.fractional_laplacian import apply_spectral
from ..heatkernel.semigroup import duhamel_trajectory


def picard_forcing(field: TorusField, params: PdeParams) -> TorusField:
    """lambda |grad theta|^p + mu (-Lap)^a theta"""

    forcing = TorusField.constant(field.grid)
    if params.lam != 0:
        forcing = forcing + params.lam * field.gradient_power(params.p)
    if params.mu != 0:
        forcing = forcing + params.mu * apply_spectral(field, params.order)
    return forcing


def picard_map(theta0: TorusField,
               previous: Sequence[TorusField],
               times: np.ndarray,
               params: PdeParams) -> List[TorusField]:
    """Next iterate at every sample time, from the previous trajectory"""

    assert len(previous) == len(times), "trajectory must match the times"
    history = [(float(t), picard_forcing(field, params))
               for t, field in zip(times, previous)]
    return duhamel_trajectory(theta0, history, params.heat)


def x_norm(trajectory: Sequence[TorusField]) -> float:
    """max over samples of sup norm plus Lipschitz estimate"""

    return max(field.linf_norm() + field.lipschitz_estimate()
               for field in trajectory)


def trajectory_difference(first: Sequence[TorusField],
                          second: Sequence[TorusField]) -> List[TorusField]:
    assert len(first) == len(second), "trajectories must have equal length"
    return [a - b for a, b in zip(first, second)]


__all__ = ["picard_forcing",
           "picard_map",
           "x_norm",
           "trajectory_difference"]
