"""Gradient bound lip(t) < B e^{C0 t} and modulus preservation

Each preset is evolved once with its assembled time modulus attached.
The configured data run under the same checks as CONFIGURED_RUN.
"""

import logging
from typing import Optional

import numpy as np

from .artifacts import CONFIGURED_RUN, configured_run
from .experiment_config import ExperimentConfig
from .lemma_checks import Outcome
from .presets import TheoremPreset
from .suite_result import SuiteResult
from ..evolve import RunReport, run
from ..fraclap import CheckGroup, MarginReport
from ..modulus import TimeModulus, assemble_time_modulus
from ..modulus import check_dissipation_inequality


def _preset_modulus(preset: TheoremPreset,
                    result: SuiteResult) -> TimeModulus:
    return result.shared(
        f"time_modulus:{preset.name}",
        lambda: assemble_time_modulus(preset.initial_data(), preset.params))


def preset_run(config: ExperimentConfig,
               result: SuiteResult,
               preset: TheoremPreset) -> RunReport:
    """preset evolved to the configured t_end on its own grid"""

    def build() -> RunReport:
        logging.info(f"Evolving {preset} to t={config.t_end}")
        report = run(preset.initial_data(),
                     config.solver_config(params=preset.params,
                                          grid=preset.grid),
                     modulus_hook=_preset_modulus(preset, result))
        return result.add_run(preset.name, report)
    return result.shared(f"run:{preset.name}", build)


def _select_run(config: ExperimentConfig,
                result: SuiteResult,
                preset: Optional[TheoremPreset]) -> RunReport:
    if preset is None:
        return configured_run(config, result)
    return preset_run(config, result, preset)


def _completed(report: RunReport) -> MarginReport:
    reason = None if report.stopped_reason is None else \
        report.stopped_reason.value
    return MarginReport("run_completed", 0.0 if report.completed else 1.0,
                        0.0, detail={"stopped_reason": reason})


def check_gradient_bound(config: ExperimentConfig,
                         result: SuiteResult,
                         preset: Optional[TheoremPreset] = None) -> Outcome:
    """lip(t) < B e^{C0 t} at every record, strictly"""

    report = _select_run(config, result, preset)
    lip, bound = report.array("lip"), report.array("theory_bound")
    with np.errstate(invalid="ignore"):
        slack = bound - lip
    worst = int(np.argmin(slack))
    name = CONFIGURED_RUN if preset is None else preset.name
    return CheckGroup(
        [_completed(report),
         MarginReport("gradient_bound", lip[worst], bound[worst],
                      strict=True, detail={"t": report.times[worst]})],
        {"run": name})


def check_no_breakthrough(config: ExperimentConfig,
                          result: SuiteResult,
                          preset: Optional[TheoremPreset] = None) -> Outcome:
    """The breakthrough scan margin stays positive at every record"""

    report = _select_run(config, result, preset)
    margins = report.array("modulus_min_margin")
    worst = int(np.argmin(margins))
    return CheckGroup(
        [_completed(report),
         MarginReport("breakthrough_margin", 0.0, margins[worst],
                      strict=True, detail={"t": report.times[worst]}),
         MarginReport("breakthrough_records", float(sum(report.breakthrough)),
                      0.0)])


def check_preset_dissipation(config: ExperimentConfig,
                             result: SuiteResult,
                             preset: TheoremPreset) -> Outcome:
    return check_dissipation_inequality(_preset_modulus(preset, result),
                                        preset.params)


__all__ = ["preset_run",
           "check_gradient_bound",
           "check_no_breakthrough",
           "check_preset_dissipation"]
