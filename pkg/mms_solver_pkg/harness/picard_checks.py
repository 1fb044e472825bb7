"""Checks of the Picard construction on the configured data"""

import numpy as np

from .artifacts import initial_data, picard_sequence
from .experiment_config import ExperimentConfig
from .lemma_checks import Outcome
from .suite_result import SuiteResult
from ..fields import TorusField
from ..fraclap import CheckGroup, MarginReport
from ..picard import compute_constants, continuous_dependence_experiment
from ..picard import iterate

# Perturbation sizes of the linearization consistency check
EPSILONS = (1e-4, 1e-5)
# Horizon of the continuous dependence runs, rounded to whole records
DEPENDENCE_T = 0.5


def check_uniform_bounds(config: ExperimentConfig,
                         result: SuiteResult) -> Outcome:
    """|theta_k|_inf < M0 and |grad theta_k|_inf < M1 for every iterate"""

    sequence = picard_sequence(config, result)
    constants = sequence.constants
    sup = max(float(np.max(history))
              for history in sequence.sup_norm_history)
    lip = max(float(np.max(history)) for history in sequence.lip_history)
    return CheckGroup([
        MarginReport("uniform_sup_bound", sup, constants.M0, strict=True),
        MarginReport("uniform_lipschitz_bound", lip, constants.M1,
                     strict=True)])


def check_contraction(config: ExperimentConfig,
                      result: SuiteResult) -> Outcome:
    return picard_sequence(config, result).verify_contraction()


def check_fixed_point(config: ExperimentConfig,
                      result: SuiteResult) -> Outcome:
    return picard_sequence(config, result).check_fixed_point()


def check_linear_limit(config: ExperimentConfig,
                       result: SuiteResult) -> Outcome:
    """With lambda = 0 the last iterate at T0 matches the exact
    multiplier solution to 1e-4"""

    params = config.params.replace(lam=0.0)
    theta0 = initial_data(config, result)
    constants = compute_constants(theta0, params)
    last = iterate(theta0, params, constants, config.k_max).iterates[-1][-1]
    k_squared = theta0.grid.k_squared
    exact = theta0.map_spectral(np.exp(constants.T0 * (
        -params.nu * k_squared + params.mu * k_squared ** params.alpha)))
    return MarginReport("linear_limit", (last - exact).linf_norm(), 0.0,
                        tol=1e-4, detail={"T0": constants.T0})


def _perturbation(theta0: TorusField) -> TorusField:
    """cos x_1 + ... + cos x_d"""

    return TorusField.from_function(
        theta0.grid,
        lambda *xs: sum(np.cos(2 * np.pi * x / theta0.grid.period)
                        for x in xs))


def check_continuous_dependence(config: ExperimentConfig,
                                result: SuiteResult) -> Outcome:
    """Amplification below the Gronwall bound at every record for each
    perturbation size, and ratios that agree within 2% between sizes"""

    theta0 = initial_data(config, result)
    perturbation = _perturbation(theta0)
    interval = config.dt * config.record_every
    horizon = interval * max(1, round(DEPENDENCE_T / interval))
    reports = [continuous_dependence_experiment(
        theta0, theta0 + eps * perturbation, config.params, horizon,
        dt=config.dt, record_every=config.record_every) for eps in EPSILONS]
    checks = [report.check for report in reports]
    for check, eps in zip(checks, EPSILONS):
        check.name = f"{check.name}_eps{eps:g}"
    first, second = reports[0].ratios, reports[1].ratios
    assert first is not None and second is not None, \
        "perturbed runs give ratios"
    spread = float(np.max(np.abs(first - second) / np.abs(second)))
    checks.append(MarginReport("linearization_consistency", spread, 0.0,
                               tol=0.02))
    return CheckGroup(checks, {"A": reports[0].A})


__all__ = ["EPSILONS",
           "DEPENDENCE_T",
           "check_uniform_bounds",
           "check_contraction",
           "check_fixed_point",
           "check_linear_limit",
           "check_continuous_dependence"]
