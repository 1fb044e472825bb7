import logging
from math import ceil
from typing import List, Optional

import numpy as np

from .pde_params import PdeParams
from .picard_bound_error import PicardBoundError
from .picard_constants import PicardConstants
from .picard_map import picard_map
from .picard_sequence import PicardSequence
from ..fields import TorusField

# Relative slack on the M0/M1 box before the grid is declared too coarse
BOUND_SLACK = 1e-3


def _check_bounds(trajectory: List[TorusField],
                  constants: PicardConstants,
                  k: int):
    sup = max(field.linf_norm() for field in trajectory)
    lip = max(field.lipschitz_estimate() for field in trajectory)
    if sup > constants.M0 * (1 + BOUND_SLACK):
        raise PicardBoundError(f"iterate {k}: sup norm {sup:.6g} exceeds"
                               f" M0 = {constants.M0:.6g}")
    if lip > constants.M1 * (1 + BOUND_SLACK):
        raise PicardBoundError(f"iterate {k}: Lipschitz estimate {lip:.6g}"
                               f" exceeds M1 = {constants.M1:.6g}")


def iterate(theta0: TorusField,
            params: PdeParams,
            constants: PicardConstants,
            k_max: int = 8,
            dt: Optional[float] = None) -> PicardSequence:
    """Builds theta_1 .. theta_kmax on [0, T0]

    theta_1 is the heat flow of theta0. dt is shrunk to T0 / n for the
    smallest whole n that keeps the samples uniform"""

    if k_max < 2:
        raise ValueError(f"k_max must be >= 2, got {k_max}")
    T0 = constants.T0
    if dt is None:
        dt = T0 / 64
    if not 0 < dt <= T0 / 64 * (1 + 1e-12):
        raise ValueError(f"dt must lie in (0, T0/64 = {T0 / 64:.6g}],"
                         f" got {dt}")
    steps = max(64, int(ceil(T0 / dt - 1e-9)))
    times = np.linspace(0, T0, steps + 1)

    # Zero forcing gives theta_1 by the same recursion as later iterates
    zero = TorusField.constant(theta0.grid)
    first = picard_map(theta0, [zero] * len(times), times,
                       params.replace(lam=0.0, mu=0.0))
    _check_bounds(first, constants, 1)
    iterates = [first]
    for k in range(2, k_max + 1):
        trajectory = picard_map(theta0, iterates[-1], times, params)
        _check_bounds(trajectory, constants, k)
        iterates.append(trajectory)
        logging.debug(f"Picard iterate {k} of {k_max} done")

    logging.info(f"Picard iteration: {k_max} iterates on [0, {T0:.6g}]"
                 f" with {steps} steps")
    return PicardSequence(theta0, params, constants, times, iterates)


__all__ = ["iterate", "BOUND_SLACK"]
