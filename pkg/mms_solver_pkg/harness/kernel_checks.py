from math import pi, sqrt

import numpy as np

from .experiment_config import ExperimentConfig
from .lemma_checks import Outcome, SWEEP_POINTS
from .suite_result import SuiteResult
from ..fields import TorusGrid
from ..fraclap import MarginReport
from ..heatkernel import continuous_dependence_instance, gronwall_bound
from ..heatkernel import premise_equality_solution
from ..heatkernel import verify_kernel_identities, verify_periodization

# Kernel times of the identity fits
KERNEL_TIMES = (0.25, 1.0, 4.0)


def check_kernel_identities(config: ExperimentConfig,
                            result: SuiteResult) -> Outcome:
    """Mass, gradient, time derivative and difference identities of the
    heat kernel at the configured nu and dim"""

    params = config.params.heat
    report = verify_kernel_identities(params, KERNEL_TIMES)
    if params.dim == 1:
        # int |grad Psi| = 1 / sqrt(pi nu s) exactly
        error = abs(report.fitted["gradient"] - 1 / sqrt(pi))
        report.checks.append(MarginReport("gradient_constant_closed_form",
                                          error, 0.0, tol=1e-4))
    return report


def check_periodization(config: ExperimentConfig,
                        result: SuiteResult) -> Outcome:
    dim = config.grid.dim
    grid = TorusGrid(dim, config.grid.period, SWEEP_POINTS[dim])
    return verify_periodization(config.params.heat, grid, s=0.1)


def check_gronwall(config: ExperimentConfig,
                   result: SuiteResult) -> Outcome:
    """The equality solution of the continuous dependence premise stays
    below the Gronwall bound"""

    instance = continuous_dependence_instance(1.0, config.params.nu, 0.0,
                                              0.5, 100)
    g = premise_equality_solution(instance)
    bounds = np.array([gronwall_bound(instance, t) for t in instance.times])
    worst = int(np.argmax(g / bounds))
    return MarginReport("gronwall_bound", g[worst], bounds[worst],
                        tol=1e-9 * bounds[worst],
                        detail={"t": float(instance.times[worst])})


__all__ = ["KERNEL_TIMES",
           "check_kernel_identities",
           "check_periodization",
           "check_gronwall"]
