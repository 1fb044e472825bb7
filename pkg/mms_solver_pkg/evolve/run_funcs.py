import logging
from math import nan
from typing import Any, Optional

from .run_report import RunReport
from .solver_config import max_stable_dt
from .solver_overflow_error import SolverOverflowError
from .stop_reason import StopReason
from ..fields import PairBatch, TorusField
from ..fields import near_diagonal_pairs, sample_pairs


def pair_batch(self) -> PairBatch:
    """Stratified pairs plus every pair with xi <= 4h"""

    grid = self.config.grid
    sampled = PairBatch(grid, sample_pairs(grid, self.config.pair_samples,
                                           self.config.seed))
    return sampled + PairBatch(grid, near_diagonal_pairs(grid, max_cells=4))


def run(self,
        theta0: TorusField,
        modulus_hook: Optional[Any] = None,
        keep_states: bool = False) -> RunReport:
    """Integrates to t_end, recording every record_every steps

    modulus_hook is a TimeModulus. When given, every record carries the
    gradient bound B e^{C0 t} and the breakthrough scan margin"""

    config = self.config
    report = RunReport(getattr(modulus_hook, "constants", None))
    batch = None if modulus_hook is None else self.pair_batch()
    self._warned_dt = False

    theta, t = theta0, 0.0
    self._record(report, theta, t, modulus_hook, batch, keep_states)
    if self._over_threshold(report):
        return report
    for n in range(1, config.steps + 1):
        try:
            theta = self.step(theta, t)
        except SolverOverflowError as e:
            logging.warning(f"Solver stopped: {e}")
            report.stopped_reason = (StopReason.NAN if e.non_finite
                                     else StopReason.OVERFLOW)
            return report
        t = n * config.dt
        if n % config.record_every == 0 or n == config.steps:
            self._record(report, theta, t, modulus_hook, batch,
                         keep_states)
            if self._over_threshold(report):
                return report
    report.stopped_reason = StopReason.COMPLETED
    logging.debug(f"Run completed: {report}")
    return report


def _over_threshold(self, report: RunReport) -> bool:
    lip = report.lip[-1]
    if lip > self.config.gradient_threshold:
        logging.warning(f"Solver stopped at t={report.times[-1]:.6g}:"
                        f" Lipschitz estimate {lip:.3g} above"
                        f" {self.config.gradient_threshold:.3g}")
        report.stopped_reason = StopReason.GRADIENT_THRESHOLD
        return True
    return False


def _record(self,
            report: RunReport,
            theta: TorusField,
            t: float,
            modulus_hook: Optional[Any],
            batch: Optional[PairBatch],
            keep_states: bool):

    config = self.config
    lip = theta.lipschitz_estimate()
    if config.dt > max_stable_dt(config, lip) and not self._warned_dt:
        logging.warning(f"dt={config.dt:.3g} exceeds the nonlinear"
                        f" stability bound {max_stable_dt(config, lip):.3g}"
                        f" at t={t:.6g}")
        self._warned_dt = True

    bound, margin, found = nan, nan, False
    if modulus_hook is not None:
        bound = modulus_hook.gradient_bound(t)
        scan = modulus_hook.scan(theta, t, batch)
        margin, found = scan.worst_margin, scan.found
        if found:
            logging.warning(f"Breakthrough at t={t:.6g}: {scan}")
    holder = nan
    if config.holder_beta is not None:
        holder = theta.holder_seminorm(config.holder_beta,
                                       config.holder_samples, config.seed)

    report.append(t, theta.linf_norm(), lip, bound, margin, holder, found)
    if keep_states:
        report.states.append(theta)


__all__ = ["pair_batch", "run"]
