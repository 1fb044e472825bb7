from functools import cached_property
from typing import List

import numpy as np

from .pde_params import PdeParams
from .picard_constants import PicardConstants
from ..fields import TorusField

# Can't import into class due to mypy issue:
# https://github.com/python/mypy/issues/7045
# Contraction funcs
from .contraction_funcs import distances
from .contraction_funcs import verify_contraction
from .contraction_funcs import check_fixed_point
from .contraction_funcs import sup_norm_history
from .contraction_funcs import lip_history


class PicardSequence:
    """Iterates theta_1 .. theta_kmax sampled on a uniform grid of
    [0, T0]. Trajectories are never modified after construction"""

    # Contraction funcs
    distances = distances
    verify_contraction = verify_contraction
    check_fixed_point = check_fixed_point
    _sup_norm_history = sup_norm_history
    _lip_history = lip_history

    def __init__(self,
                 theta0: TorusField,
                 params: PdeParams,
                 constants: PicardConstants,
                 times: np.ndarray,
                 iterates: List[List[TorusField]]):

        assert all(len(trajectory) == len(times) for trajectory in iterates), \
            "every iterate must be sampled at every time"
        self.theta0: TorusField = theta0
        self.params: PdeParams = params
        self.constants: PicardConstants = constants
        self.times: np.ndarray = times
        self.iterates: List[List[TorusField]] = iterates

    @property
    def k_max(self) -> int:
        return len(self.iterates)

    @cached_property
    def sup_norm_history(self) -> List[np.ndarray]:
        """|theta_k(t)|_inf per iterate and sample"""

        return self._sup_norm_history()

    @cached_property
    def lip_history(self) -> List[np.ndarray]:
        return self._lip_history()

    def __len__(self) -> int:
        return len(self.iterates)

    def __repr__(self) -> str:
        return (f"PicardSequence(k_max={self.k_max},"
                f" samples={len(self.times)}, T0={self.times[-1]:.6g})")


__all__ = ["PicardSequence"]
