from typing import Optional

import numpy as np

from .solver_config import SolverConfig

# Can't import into class due to mypy issue:
# https://github.com/python/mypy/issues/7045
# Stepping funcs
from .stepping_funcs import linear_symbol
from .stepping_funcs import phi_functions
from .stepping_funcs import step
from .stepping_funcs import _nonlinear
from .stepping_funcs import _check_values

# Run funcs
from .run_funcs import pair_batch
from .run_funcs import run
from .run_funcs import _over_threshold
from .run_funcs import _record


class PseudoSpectralSolver:
    """Periodic pseudo-spectral integrator for

        d_t theta = nu Lap theta + lambda |grad theta|^p
                    + mu (-Lap)^alpha theta

    The linear symbol is integrated exactly, the nonlinearity by ETD2RK
    """

    # Stepping funcs
    linear_symbol = linear_symbol
    step = step
    _nonlinear = _nonlinear
    _check_values = _check_values

    # Run funcs
    pair_batch = pair_batch
    run = run
    _over_threshold = _over_threshold
    _record = _record

    def __init__(self, config: SolverConfig):
        self.config: SolverConfig = config
        z = self.linear_symbol() * config.dt
        phi1, phi2 = phi_functions(z)
        # e^{Lh}, h phi1(Lh) and h phi2(Lh)
        self.propagator: np.ndarray = np.exp(z)
        self.phi1: np.ndarray = config.dt * phi1
        self.phi2: np.ndarray = config.dt * phi2
        self.dealias_mask: Optional[np.ndarray] = (
            config.grid.dealias_mask() if config.dealias else None)
        self._warned_dt: bool = False


__all__ = ["PseudoSpectralSolver"]
