from pathlib import Path
from typing import Any, Callable, Dict, Tuple

import pytest

from ..experiment_config import ExperimentConfig
from ..registry import CheckEntry
from ..suite import Suite
from ...evolve import RunReport, StopReason
from ...fraclap import CheckGroup, MarginReport
from ...modulus import TheoryConstants
from ...picard import PicardConstants


@pytest.fixture(scope="function")
def config_path(tmp_path: Path) -> Callable[[str], Path]:
    """Writes text to a config file and returns its path"""

    def write(text: str) -> Path:
        path = tmp_path / "config.yml"
        path.write_text(text)
        return path
    return write


@pytest.fixture(scope="function")
def small_settings(tmp_path: Path) -> Dict[str, Any]:
    """A cheap configuration writing into tmp_path"""

    return {"suite": "kernel",
            "output_dir": str(tmp_path / "reports"),
            "grid": {"n": 32},
            "run": {"dt": 0.01, "t_end": 0.1, "record_every": 5},
            "samples": {"pairs": 100, "holder": 100, "random_fields": 2}}


@pytest.fixture(scope="function")
def small_config(small_settings: Dict[str, Any]) -> ExperimentConfig:
    return ExperimentConfig(small_settings)


def _fake_run(records: int, constants=None) -> RunReport:
    report = RunReport(constants)
    for i in range(records):
        t = 0.01 * i
        report.append(t, 1.0 - t, 1.0 + t, 2.0 + t, 0.5 - 0.001 * i)
    report.stopped_reason = StopReason.COMPLETED
    return report


@pytest.fixture(scope="function")
def fake_run() -> Callable[..., RunReport]:
    """RunReport with the given number of made up records"""

    return _fake_run


@pytest.fixture(scope="function")
def theory_constants() -> TheoryConstants:
    picard = PicardConstants(M0=2.0, M1=2.0, kappa0=3.0, T0=0.01,
                             c_dalpha=0.5)
    return TheoryConstants(c_dalpha=0.5, B=4.0, delta0=0.1, C0=7.0,
                           picard=picard)


def _passing(config, result):
    return MarginReport("passing", 1.0, 2.0)


def _failing(config, result):
    return CheckGroup([MarginReport("fine", 0.0, 1.0),
                       MarginReport("broken", 3.0, 1.0)])


def _raising(config, result):
    raise ZeroDivisionError("float division by zero")


def _with_run(config, result):
    report = result.shared("run:fake", lambda: result.add_run(
        "fake", _fake_run(3)))
    return MarginReport("with_run", 0.0, float(len(report)))


@pytest.fixture(scope="function")
def toy_registry() -> Tuple[CheckEntry, ...]:
    """Four checks over three made up references"""

    kernel = (Suite.KERNEL,)
    return (CheckEntry("passing", "ref-a", kernel, _passing),
            CheckEntry("failing", "ref-b", kernel, _failing),
            CheckEntry("raising", "ref-b", (Suite.PICARD,), _raising),
            CheckEntry("with_run", "ref-c", kernel, _with_run))


@pytest.fixture(scope="function")
def toy_references() -> Tuple[str, ...]:
    return ("ref-a", "ref-b", "ref-c")
