import logging
from math import nan
from time import perf_counter
from typing import Optional, Sequence

from .registry import CheckEntry
from .suite import Suite
from .suite_result import CheckRecord, SuiteResult
from ..evolve import SolverOverflowError
from ..fraclap import CheckGroup, QuadratureError
from ..modulus import ModulusConstructionError
from ..picard import PicardBoundError

# Raised by a check's numerics. Recorded as a failed check, never raised
NUMERICAL_ERRORS = (ArithmeticError,
                    ValueError,
                    QuadratureError,
                    PicardBoundError,
                    SolverOverflowError,
                    ModulusConstructionError)


def execute(self,
            entries: Sequence[CheckEntry],
            suite: Optional[Suite] = None) -> SuiteResult:
    """Runs entries in order and commits one record per entry"""

    result = SuiteResult(suite)
    label = "checks" if suite is None else f"suite {suite.value}"
    logging.info(f"Starting {label}: {len(entries)} checks")
    for entry in entries:
        result.records.append(self._run_check(entry, result))
    logging.info(f"Finished {label}: {len(result.failed)} of {len(result)}"
                 f" checks failed, pass rate {result.pass_rate:.3f}")
    return result


def _run_check(self, entry: CheckEntry, result: SuiteResult) -> CheckRecord:
    start = perf_counter()
    try:
        outcome = entry(self.config, result)
    except NUMERICAL_ERRORS as e:
        logging.warning(f"{entry.check_id} failed with"
                        f" {type(e).__name__}: {e}")
        return CheckRecord(entry.check_id, entry.reference, False, nan,
                           perf_counter() - start)
    seconds = perf_counter() - start

    if isinstance(outcome, CheckGroup):
        margin = outcome.worst_margin
    else:
        margin = outcome.margin
    record = CheckRecord(entry.check_id, entry.reference, outcome.passed,
                         margin, seconds)
    if record.passed:
        logging.info(f"{entry.check_id} passed with margin {margin:.6g}")
    else:
        logging.warning(f"{entry.check_id} failed: {outcome!r}")
    return record


__all__ = ["NUMERICAL_ERRORS", "execute", "_run_check"]
