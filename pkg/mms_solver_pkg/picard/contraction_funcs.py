import logging
from typing import List, Optional, TYPE_CHECKING

import numpy as np

from .pde_params import PdeParams
from .picard_map import picard_map, trajectory_difference, x_norm
from ..fields import TorusField
from ..fraclap.margin_report import CheckGroup, MarginReport

if TYPE_CHECKING:
    from .picard_sequence import PicardSequence


def distances(self) -> List[float]:
    """d_k = |theta_k - theta_{k-1}|_X for k = 2 .. k_max"""

    return [x_norm(trajectory_difference(current, previous))
            for previous, current in zip(self.iterates, self.iterates[1:])]


def verify_contraction(self: "PicardSequence") -> CheckGroup:
    """d_k <= 2^{-(k-1)} and d_k / d_{k-1} <= 1/2 for k >= 3

    Ratios are skipped once d_{k-1} <= 1e-10, where they measure
    roundoff"""

    if len(self.iterates) < 3:
        raise ValueError("contraction needs at least three iterates")

    ds = self.distances()
    checks: List[MarginReport] = list()
    for k, d in enumerate(ds, start=2):
        checks.append(MarginReport(f"envelope_{k}", d, 2.0 ** -(k - 1),
                                   tol=1e-6))
        previous = ds[k - 3] if k >= 3 else None
        if previous is not None and previous > 1e-10:
            checks.append(MarginReport(f"ratio_{k}", d / previous, 0.5,
                                       tol=1e-2))
    group = CheckGroup(checks, {"distances": ds})
    logging.info(f"Picard contraction over {len(ds)} steps:"
                 f" passed={group.passed}")
    return group


def check_fixed_point(self: "PicardSequence",
                      theta0: Optional[TorusField] = None,
                      params: Optional[PdeParams] = None) -> CheckGroup:
    """One more application of the Picard map moves the last iterate
    by at most 2 d_{k_max}; for lambda = 0 the mean is conserved"""

    theta0 = self.theta0 if theta0 is None else theta0
    params = self.params if params is None else params
    last = self.iterates[-1]
    following = picard_map(theta0, last, self.times, params)
    change = x_norm(trajectory_difference(following, last))
    last_distance = self.distances()[-1]
    checks = [MarginReport("fixed_point", change, 2 * last_distance,
                           tol=1e-12)]
    if params.lam == 0:
        drift = max(abs(field.mean - theta0.mean)
                    for trajectory in self.iterates + [following]
                    for field in trajectory)
        checks.append(MarginReport("mean_conservation", drift, 0.0,
                                   tol=1e-12))
    return CheckGroup(checks, {"change": change,
                               "last_distance": last_distance})


def sup_norm_history(self) -> List[np.ndarray]:
    return [np.array([field.linf_norm() for field in trajectory])
            for trajectory in self.iterates]


def lip_history(self) -> List[np.ndarray]:
    return [np.array([field.lipschitz_estimate() for field in trajectory])
            for trajectory in self.iterates]


__all__ = ["distances",
           "verify_contraction",
           "check_fixed_point",
           "sup_norm_history",
           "lip_history"]
