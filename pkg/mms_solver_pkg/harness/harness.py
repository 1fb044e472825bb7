import logging
from pathlib import Path
from typing import List, Optional, Sequence

from .experiment_config import ExperimentConfig
from .registry import CheckEntry, REFERENCES, REGISTRY, audit_registry
from .registry import entries_by_id, entries_for
from .report_funcs import emit_report, write_config
from .suite import Suite
from .suite_result import SuiteResult

# Can't import into class due to mypy issue:
# https://github.com/python/mypy/issues/7045
# Suite funcs
from .suite_funcs import execute
from .suite_funcs import _run_check


class Harness:
    """Runs registered checks for one ExperimentConfig and writes the
    report files to its output_dir"""

    # Suite funcs
    execute = execute
    _run_check = _run_check

    def __init__(self,
                 config: ExperimentConfig,
                 registry: Sequence[CheckEntry] = REGISTRY,
                 references: Sequence[str] = tuple(REFERENCES)):

        audit_registry(registry, references)
        self.config: ExperimentConfig = config
        self.registry: Sequence[CheckEntry] = registry
        # Report files of the current run, removed if it fails
        self.written: List[Path] = list()

    def run(self,
            suite: Optional[Suite] = None,
            check_ids: Optional[Sequence[str]] = None) -> SuiteResult:
        """Runs _run and deletes partial reports if anything is amiss"""

        try:
            return self._run(suite, check_ids)
        except Exception as e:
            logging.critical(f"{e}: removing the partial reports written"
                             f" to {self.config.output_dir}")
            self._remove_written()
            raise

    def _run(self,
             suite: Optional[Suite],
             check_ids: Optional[Sequence[str]]) -> SuiteResult:
        """Runs the configured suite, the given suite, or the given checks

        Results are committed in registry order"""

        if check_ids is not None:
            entries = entries_by_id(check_ids, self.registry)
        else:
            suite = self.config.suite if suite is None else suite
            entries = entries_for(suite, self.registry)

        output_dir = self.config.output_dir
        output_dir.mkdir(parents=True, exist_ok=True)
        self.written = list()
        write_config(self.config, output_dir, self.written)
        result = self.execute(entries, suite)
        emit_report(result, result.runs, output_dir,
                    self.config.record_timings, self.written)
        return result

    def _remove_written(self):
        for path in self.written:
            path.unlink(missing_ok=True)
        self.written = list()


def run_suite(config: ExperimentConfig) -> SuiteResult:
    """Runs config.suite and writes its reports"""

    return Harness(config).run()


__all__ = ["Harness", "run_suite"]
