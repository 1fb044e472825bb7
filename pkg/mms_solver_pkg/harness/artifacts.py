"""Objects several checks of one suite share, built once per result"""

import logging

from .experiment_config import ExperimentConfig
from .suite_result import SuiteResult
from ..evolve import RunReport, run
from ..fields import TorusField
from ..modulus import TimeModulus, assemble_time_modulus
from ..picard import PicardSequence, compute_constants, iterate

CONFIGURED_RUN = "configured"


def initial_data(config: ExperimentConfig,
                 result: SuiteResult) -> TorusField:
    return result.shared("theta0", config.initial_field)


def time_modulus(config: ExperimentConfig,
                 result: SuiteResult) -> TimeModulus:
    """B, delta0 and C0 for the configured data"""

    return result.shared(
        "time_modulus",
        lambda: assemble_time_modulus(initial_data(config, result),
                                      config.params))


def picard_sequence(config: ExperimentConfig,
                    result: SuiteResult) -> PicardSequence:
    def build() -> PicardSequence:
        theta0 = initial_data(config, result)
        constants = compute_constants(theta0, config.params)
        return iterate(theta0, config.params, constants, config.k_max)
    return result.shared("picard_sequence", build)


def configured_run(config: ExperimentConfig,
                   result: SuiteResult) -> RunReport:
    """The configured evolution with the time modulus attached"""

    def build() -> RunReport:
        logging.info(f"Evolving the configured data to t={config.t_end}")
        report = run(initial_data(config, result), config.solver_config(),
                     modulus_hook=time_modulus(config, result))
        return result.add_run(CONFIGURED_RUN, report)
    return result.shared(f"run:{CONFIGURED_RUN}", build)


__all__ = ["CONFIGURED_RUN",
           "initial_data",
           "time_modulus",
           "picard_sequence",
           "configured_run"]
