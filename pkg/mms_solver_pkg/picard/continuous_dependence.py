"""Continuous dependence on the data in W^{1,inf}

Two solutions theta and phi are evolved side by side and the ratio
|theta(t) - phi(t)|_{W^{1,inf}} / |theta0 - phi0|_{W^{1,inf}} is compared
with the Gronwall bound for f(s) = A ((nu s)^{-1/2} + 1), q = 3.
"""

import logging
from typing import List, Optional

import numpy as np

from .pde_params import PdeParams
from ..evolve.integration import run
from ..evolve.solver_config import SolverConfig
from ..fields import TorusField
from ..fraclap.frac_order import interpolation_constant
from ..fraclap.margin_report import MarginReport
from ..heatkernel.gronwall import continuous_dependence_instance
from ..heatkernel.gronwall import gronwall_bound


def w1inf_norm(field: TorusField) -> float:
    return field.linf_norm() + field.lipschitz_estimate()


class ContinuousDependenceReport:
    """Amplification ratios and their Gronwall bound at record times

    A degenerate report (identical data) carries the raw differences and
    no ratios"""

    def __init__(self,
                 times: np.ndarray,
                 differences: np.ndarray,
                 initial_difference: float,
                 A: float,
                 bound: Optional[np.ndarray]):

        self.times: np.ndarray = times
        self.differences: np.ndarray = differences
        self.initial_difference: float = initial_difference
        self.A: float = A
        self.bound: Optional[np.ndarray] = bound

    @property
    def degenerate(self) -> bool:
        return self.initial_difference == 0

    @property
    def ratios(self) -> Optional[np.ndarray]:
        if self.degenerate:
            return None
        return self.differences / self.initial_difference

    @property
    def check(self) -> MarginReport:
        if self.degenerate:
            return MarginReport("uniqueness",
                                float(np.max(self.differences)), 0.0,
                                tol=1e-10)
        assert self.bound is not None, "nondegenerate report needs a bound"
        ratios = self.ratios
        with np.errstate(invalid="ignore"):
            slack = self.bound - ratios
        worst = int(np.argmin(slack))
        return MarginReport("continuous_dependence",
                            float(ratios[worst]),
                            float(self.bound[worst]),
                            tol=1e-9 * float(ratios[worst]),
                            detail={"t": float(self.times[worst]),
                                    "A": self.A})

    @property
    def passed(self) -> bool:
        return self.check.passed

    def __repr__(self) -> str:
        return (f"ContinuousDependenceReport(records={len(self.times)},"
                f" passed={self.passed})")


def dependence_constant(params: PdeParams,
                        lip_theta: np.ndarray,
                        lip_phi: np.ndarray) -> float:
    """A = 2 (mu K + p |lambda| max_t(|grad theta|^{p-1}
    + |grad phi|^{p-1}))"""

    K = interpolation_constant(params.order)
    powers = lip_theta ** (params.p - 1) + lip_phi ** (params.p - 1)
    return 2 * (params.mu * K
                + params.p * abs(params.lam) * float(np.max(powers)))


def continuous_dependence_experiment(theta0: TorusField,
                                     theta1: TorusField,
                                     params: PdeParams,
                                     T: float,
                                     dt: float = 1e-3,
                                     record_every: int = 10
                                     ) -> ContinuousDependenceReport:
    """Evolves theta0 and theta1 to T and bounds their separation"""

    config = SolverConfig(params, theta0.grid, dt=dt, t_end=T,
                          record_every=record_every)
    if config.steps % config.record_every != 0:
        raise ValueError(f"T / dt = {config.steps} steps is not a multiple"
                         f" of record_every = {record_every}")
    first = run(theta0, config, keep_states=True)
    second = run(theta1, config, keep_states=True)
    if not (first.completed and second.completed):
        raise ValueError(f"T = {T} lies beyond a run's validity:"
                         f" {first}, {second}")

    times = first.array("times")
    differences = np.array([w1inf_norm(a - b)
                            for a, b in zip(first.states, second.states)])
    initial = w1inf_norm(theta0 - theta1)
    A = dependence_constant(params, first.array("lip"),
                            second.array("lip"))

    bound: Optional[np.ndarray] = None
    if initial > 0:
        instance = continuous_dependence_instance(A, params.nu, 0.0, T,
                                                  len(times) - 1)
        bounds: List[float] = [gronwall_bound(instance, t) for t in times]
        bound = np.array(bounds)
    report = ContinuousDependenceReport(times, differences, initial, A,
                                        bound)
    logging.info(f"Continuous dependence to T={T}: {report}")
    return report


__all__ = ["ContinuousDependenceReport",
           "w1inf_norm",
           "dependence_constant",
           "continuous_dependence_experiment"]
