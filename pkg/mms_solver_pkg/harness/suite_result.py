from math import isnan
from typing import Any, Callable, Dict, List, Optional

from .suite import Suite
from ..evolve import RunReport


class CheckRecord:
    """One row of the summary file"""

    __slots__ = ("check_id", "paper_ref", "passed", "margin", "seconds")

    def __init__(self,
                 check_id: str,
                 paper_ref: str,
                 passed: bool,
                 margin: float,
                 seconds: float = 0.0):

        self.check_id: str = check_id
        self.paper_ref: str = paper_ref
        self.passed: bool = bool(passed)
        self.margin: float = float(margin)
        self.seconds: float = float(seconds)

    def row(self, record_timings: bool = False) -> Dict[str, str]:
        """Summary row. Wall clock seconds only when asked for, so that
        reports stay byte-identical between runs"""

        return {"check_id": self.check_id,
                "paper_ref": self.paper_ref,
                "pass": "true" if self.passed else "false",
                "margin": "nan" if isnan(self.margin)
                else format(self.margin, ".17g"),
                "seconds": format(self.seconds, ".3f") if record_timings
                else ""}

    def __repr__(self) -> str:
        return (f"CheckRecord({self.check_id}, {self.paper_ref},"
                f" passed={self.passed}, margin={self.margin:.6g})")


class SuiteResult:
    """Check records in registry order plus the runs they produced"""

    # Summary columns, in file order
    columns = ("check_id", "paper_ref", "pass", "margin", "seconds")

    def __init__(self, suite: Optional[Suite] = None):
        self.suite: Optional[Suite] = suite
        self.records: List[CheckRecord] = list()
        # Run name to RunReport, written as one time series file each
        self.runs: Dict[str, RunReport] = dict()
        # Objects shared between checks, e.g. one Picard sequence
        self._shared: Dict[str, Any] = dict()

    def shared(self, key: str, factory: Callable[[], Any]) -> Any:
        """factory() the first time key is asked for, cached after"""

        if key not in self._shared:
            self._shared[key] = factory()
        return self._shared[key]

    def add_run(self, name: str, report: RunReport) -> RunReport:
        assert name not in self.runs, f"run {name} recorded twice"
        self.runs[name] = report
        return report

    @property
    def passed(self) -> bool:
        return all(record.passed for record in self.records)

    @property
    def failed(self) -> List[CheckRecord]:
        return [record for record in self.records if not record.passed]

    @property
    def pass_rate(self) -> float:
        if not self.records:
            return 1.0
        return (len(self.records) - len(self.failed)) / len(self.records)

    def __len__(self) -> int:
        return len(self.records)

    def __repr__(self) -> str:
        suite = None if self.suite is None else self.suite.value
        return (f"SuiteResult(suite={suite}, checks={len(self)},"
                f" pass_rate={self.pass_rate:.3f})")


__all__ = ["CheckRecord", "SuiteResult"]
