"""Checks of the pseudo-spectral solver

linear oracle       lambda = 0 against the exact multiplier solution
manufactured order  temporal order on theta* = e^{-t} sin x_1
maximum principle   mu = 0, p = 2 keeps |grad theta|_inf nonincreasing
smoothing           Holder seminorm of grad theta from rough data
sup norm            the explicit solution of the sup norm inequality
"""

from math import log2
from typing import List

import numpy as np

from .artifacts import configured_run, initial_data
from .experiment_config import ExperimentConfig
from .lemma_checks import Outcome
from .presets import sawtooth
from .suite_result import SuiteResult
from ..evolve import RunReport, SolverConfig, check_parabolic_smoothing
from ..evolve import growth_exponent, regularity_monitor, run
from ..fields import TorusField, TorusGrid
from ..fraclap import CheckGroup, MarginReport
from ..picard import PdeParams

LINEAR_RUN = "linear"
# Step sizes and grid of the manufactured solution
ORDER_DTS = (0.05, 0.025, 0.0125)
ORDER_POINTS = 32
# Horizon of the maximum principle and smoothing runs
PRINCIPLE_T = 1.0
SMOOTHING_BETA = 0.5


def check_linear_oracle(config: ExperimentConfig,
                        result: SuiteResult) -> Outcome:
    """Every record of the lambda = 0 run against
    e^{t (mu |k|^{2a} - nu |k|^2)} theta0^ to 1e-6 relative"""

    params = config.params.replace(lam=0.0)
    theta0 = initial_data(config, result)
    report = run(theta0, config.solver_config(params=params),
                 keep_states=True)
    k_squared = theta0.grid.k_squared
    symbol = -params.nu * k_squared + params.mu * k_squared ** params.alpha
    scale = max(theta0.linf_norm(), 1e-300)
    worst = 0.0
    for t, state in zip(report.times, report.states):
        with np.errstate(over="ignore"):
            exact = theta0.map_spectral(np.exp(t * symbol))
        worst = max(worst, (state - exact).linf_norm() / scale)
    # States are only needed for the comparison
    report.states.clear()
    result.add_run(LINEAR_RUN, report)
    return CheckGroup(
        [MarginReport("linear_oracle", worst, 0.0, tol=1e-6),
         MarginReport("linear_completed", 0.0 if report.completed else 1.0,
                      0.0)],
        {"growth_exponent": growth_exponent(report)})


def _manufactured_source(grid: TorusGrid, params: PdeParams):
    """Source making theta*(t, x) = e^{-t} sin x_1 an exact solution"""

    def source(t: float) -> TorusField:
        return TorusField.from_function(
            grid,
            lambda x, *rest: ((-1 + params.nu - params.mu) * np.exp(-t)
                              * np.sin(x)
                              - params.lam * np.exp(-2 * t)
                              * np.cos(x) ** 2))
    return source


def check_manufactured_order(config: ExperimentConfig,
                             result: SuiteResult) -> Outcome:
    """Temporal order >= 1.85 for the second order exponential scheme"""

    params = config.params.replace(p=2.0, dim=1)
    grid = TorusGrid(1, 2 * np.pi, ORDER_POINTS)
    source = _manufactured_source(grid, params)
    theta0 = TorusField.from_function(grid, np.sin)
    exact = np.exp(-1.0) * theta0.values
    errors: List[float] = list()
    for dt in ORDER_DTS:
        solver = SolverConfig(params, grid, dt=dt, t_end=1.0, source=source,
                              record_every=1000)
        report = run(theta0, solver, keep_states=True)
        if not report.completed:
            return MarginReport("manufactured_order", 0.0, 1.85,
                                detail={"stopped": report})
        errors.append(float(np.max(np.abs(report.states[-1].values
                                          - exact))))
    orders = [log2(a / b) for a, b in zip(errors, errors[1:])]
    return MarginReport("manufactured_order", 1.85, min(orders),
                        detail={"errors": errors, "orders": orders})


def check_maximum_principle(config: ExperimentConfig,
                            result: SuiteResult) -> Outcome:
    """mu = 0, p = 2 for lambda = +1 and -1: lip never grows by more than
    1e-3 relative between records"""

    theta0 = initial_data(config, result)
    checks = list()
    for lam in (1.0, -1.0):
        params = config.params.replace(mu=0.0, p=2.0, lam=lam)
        report = run(theta0, config.solver_config(
            params=params, t_end=min(config.t_end, PRINCIPLE_T)))
        lips = report.array("lip")
        growth = float(np.max(np.diff(lips), initial=0.0))
        checks.append(MarginReport(f"maximum_principle_lam{lam:+g}",
                                   growth, 0.0,
                                   tol=1e-3 * max(lips[0], 1e-12)))
    return CheckGroup(checks)


def check_smoothing(config: ExperimentConfig,
                    result: SuiteResult) -> Outcome:
    """Rough sawtooth data: the Holder seminorm of grad theta decays like
    t^{-(1+b)/2} with b = 1/2"""

    params = config.params.replace(dim=1)
    grid = TorusGrid(1, 2 * np.pi, 256)
    solver = config.solver_config(params=params, grid=grid, dt=2e-4,
                                  t_end=0.05, record_every=5,
                                  holder_beta=SMOOTHING_BETA)
    report = run(sawtooth(grid), solver)
    return check_parabolic_smoothing(report, SMOOTHING_BETA, t_min=3e-3,
                                     fit_max=3e-2, rough=True)


def check_sup_norm(config: ExperimentConfig,
                   result: SuiteResult) -> Outcome:
    report: RunReport = configured_run(config, result)
    return regularity_monitor(report, config.params)


__all__ = ["LINEAR_RUN",
           "check_linear_oracle",
           "check_manufactured_order",
           "check_maximum_principle",
           "check_smoothing",
           "check_sup_norm"]
