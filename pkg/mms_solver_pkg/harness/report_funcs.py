"""Report files of one harness run

    summary.tsv      one row per check
    run_<name>.tsv   time series of one solver run
    constants.tsv    constants of every run that carried a time modulus
    config.yaml      the resolved ExperimentConfig

Floats are written with 17 significant digits, which round trips.
"""

from csv import DictWriter
import logging
from math import isnan
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence

from .experiment_config import ExperimentConfig
from .suite_result import SuiteResult
from ..evolve import RunReport

SUMMARY_FILE = "summary.tsv"
CONSTANTS_FILE = "constants.tsv"
CONFIG_FILE = "config.yaml"
CONSTANTS_COLUMNS = ("run", "name", "value", "formula")


def run_file_name(name: str) -> str:
    return f"run_{name}.tsv"


def format_float(value: float) -> str:
    return "nan" if isnan(value) else format(value, ".17g")


def _write_tsv(path: Path,
               columns: Sequence[str],
               rows: Iterable[Dict[str, Any]],
               written: List[Path]):
    # Recorded before opening so a failed write is still cleaned up
    written.append(path)
    try:
        with path.open(mode="w", newline="") as f:
            writer = DictWriter(f, fieldnames=list(columns), delimiter="\t",
                                lineterminator="\n")
            writer.writeheader()
            for row in rows:
                writer.writerow(row)
    except OSError as e:
        raise OSError(f"Could not write report file {path}: {e}") from e


def write_config(config: ExperimentConfig,
                 output_dir: Path,
                 written: Optional[List[Path]] = None) -> Path:
    path = output_dir / CONFIG_FILE
    if written is not None:
        written.append(path)
    try:
        path.write_text(config.dumps_yaml())
    except OSError as e:
        raise OSError(f"Could not write config file {path}: {e}") from e
    return path


def emit_report(result: SuiteResult,
                run_reports: Mapping[str, RunReport],
                output_dir: Path,
                record_timings: bool = False,
                written: Optional[List[Path]] = None) -> List[Path]:
    """Writes the summary, one time series per run and, when any run
    carries TheoryConstants, the constants file. Returns the paths"""

    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    paths: List[Path] = list() if written is None else written
    start = len(paths)

    _write_tsv(output_dir / SUMMARY_FILE, SuiteResult.columns,
               (record.row(record_timings) for record in result.records),
               paths)

    constant_rows: List[Dict[str, str]] = list()
    for name, report in run_reports.items():
        _write_tsv(output_dir / run_file_name(name), RunReport.columns,
                   ({column: format_float(value)
                     for column, value in row.items()}
                    for row in report.rows()),
                   paths)
        if report.constants is not None:
            constant_rows.extend({"run": name,
                                  "name": constant,
                                  "value": format_float(value),
                                  "formula": formula}
                                 for constant, value, formula
                                 in report.constants.rows())
    if constant_rows:
        _write_tsv(output_dir / CONSTANTS_FILE, CONSTANTS_COLUMNS,
                   constant_rows, paths)
    logging.info(f"Wrote {len(paths) - start} report files to {output_dir}")
    return paths[start:]


__all__ = ["SUMMARY_FILE",
           "CONSTANTS_FILE",
           "CONFIG_FILE",
           "CONSTANTS_COLUMNS",
           "run_file_name",
           "format_float",
           "write_config",
           "emit_report"]
