from .config_error import ConfigError
from .suite import Suite
from .presets import InitialData, PRESET_NAMES, TheoremPreset
from .presets import THEOREM_PRESETS, build_initial_data, sawtooth
from .experiment_config import DEFAULTS, ExperimentConfig, parse_config
from .suite_result import CheckRecord, SuiteResult
from .registry import CheckEntry, REFERENCES, REGISTRY, RUN_CHECK_IDS
from .registry import audit_registry, entries_by_id, entries_for
from .report_funcs import SUMMARY_FILE, CONSTANTS_FILE, CONFIG_FILE
from .report_funcs import emit_report, run_file_name, write_config
from .harness import Harness, run_suite

__all__ = ["ConfigError",
           "Suite",
           "InitialData",
           "PRESET_NAMES",
           "TheoremPreset",
           "THEOREM_PRESETS",
           "build_initial_data",
           "sawtooth",
           "DEFAULTS",
           "ExperimentConfig",
           "parse_config",
           "CheckRecord",
           "SuiteResult",
           "CheckEntry",
           "REFERENCES",
           "REGISTRY",
           "RUN_CHECK_IDS",
           "audit_registry",
           "entries_by_id",
           "entries_for",
           "SUMMARY_FILE",
           "CONSTANTS_FILE",
           "CONFIG_FILE",
           "emit_report",
           "run_file_name",
           "write_config",
           "Harness",
           "run_suite"]
