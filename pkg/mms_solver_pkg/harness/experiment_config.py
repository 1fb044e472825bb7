from copy import deepcopy
from math import pi
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml
from yamlable import yaml_info, YamlAble

from .config_error import ConfigError
from .presets import InitialData, PRESET_NAMES, build_initial_data
from .suite import Suite
from ..evolve import SolverConfig
from ..fields import TorusField, TorusGrid
from ..picard import PdeParams


# Every accepted key with its default. Nested dicts are config sections
DEFAULTS: Dict[str, Any] = {
    "suite": "lemmas",
    "seed": 0,
    "output_dir": "mms_reports",
    "record_timings": False,
    "pde": {"nu": 1.0,
            "mu": 1.0,
            "alpha": 0.25,
            "lambda": 1.0,
            "p": 2.0},
    "grid": {"dim": 1,
             "n": 256,
             "L": 2 * pi},
    "initial_data": "sin",
    "run": {"dt": 1e-3,
            "t_end": 5.0,
            "record_every": 10,
            "dealias": None},
    "samples": {"pairs": 10000,
                "holder": 10000,
                "random_fields": 100,
                "shell_cutoff": 8},
    "picard": {"k_max": 8}}

_MODE_KEYS = ("amplitude", "mode", "phase")


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _check_value(key: str, default: Any, value: Any) -> Any:
    """value coerced to the type of default, ConfigError otherwise"""

    if default is None:
        # Only dealias, where null means automatic
        if value is None or isinstance(value, bool):
            return value
        raise ConfigError(f"{key} must be true, false or null, got {value!r}")
    elif isinstance(default, bool):
        if isinstance(value, bool):
            return value
        raise ConfigError(f"{key} must be true or false, got {value!r}")
    elif isinstance(default, int):
        if isinstance(value, int) and not isinstance(value, bool):
            return value
        raise ConfigError(f"{key} must be an integer, got {value!r}")
    elif isinstance(default, float):
        if _is_number(value):
            return float(value)
        raise ConfigError(f"{key} must be a number, got {value!r}")
    else:
        if isinstance(value, str):
            return value
        raise ConfigError(f"{key} must be a string, got {value!r}")


def _check_initial_data(value: Any) -> InitialData:
    if isinstance(value, str):
        if value not in PRESET_NAMES:
            raise ConfigError(f"initial_data: unknown preset {value!r},"
                              f" expected one of {', '.join(PRESET_NAMES)}")
        return value
    if not isinstance(value, list) or len(value) == 0:
        raise ConfigError("initial_data must be a preset name or a"
                          f" nonempty list of modes, got {value!r}")
    modes = list()
    for i, entry in enumerate(value):
        if not isinstance(entry, dict):
            raise ConfigError(f"initial_data[{i}] must be a mapping,"
                              f" got {entry!r}")
        for key in entry:
            if key not in _MODE_KEYS:
                raise ConfigError("unknown config key"
                                  f" 'initial_data[{i}].{key}'")
        if "mode" not in entry:
            raise ConfigError(f"initial_data[{i}].mode is required")
        mode = entry["mode"]
        if (not isinstance(mode, list)
                or not all(isinstance(k, int) and not isinstance(k, bool)
                           for k in mode)):
            raise ConfigError(f"initial_data[{i}].mode must be a list of"
                              f" integers, got {mode!r}")
        checked: Dict[str, Any] = {"mode": list(mode)}
        for key in ("amplitude", "phase"):
            if key in entry:
                if not _is_number(entry[key]):
                    raise ConfigError(f"initial_data[{i}].{key} must be a"
                                      f" number, got {entry[key]!r}")
                checked[key] = float(entry[key])
        modes.append(checked)
    return modes


def _merge(defaults: Dict[str, Any],
           loaded: Any,
           prefix: str = "") -> Dict[str, Any]:
    """defaults updated with loaded, rejecting unknown keys by their
    full dotted name"""

    if not isinstance(loaded, dict):
        section = prefix.rstrip(".") or "config"
        raise ConfigError(f"{section} must be a mapping, got {loaded!r}")
    resolved = deepcopy(defaults)
    for key, value in loaded.items():
        dotted = f"{prefix}{key}"
        if key not in defaults:
            raise ConfigError(f"unknown config key {dotted!r}")
        default = defaults[key]
        if isinstance(default, dict):
            resolved[key] = _merge(default, value, f"{dotted}.")
        elif dotted == "initial_data":
            resolved[key] = _check_initial_data(value)
        else:
            resolved[key] = _check_value(dotted, default, value)
    return resolved


def _set_dotted(loaded: Dict[str, Any], dotted: str, value: Any):
    """Sets loaded[a][b] = value for dotted = 'a.b'"""

    parts = dotted.split(".")
    node: Any = DEFAULTS
    for part in parts:
        if not isinstance(node, dict) or part not in node:
            raise ConfigError(f"unknown config key {dotted!r}")
        node = node[part]
    target = loaded
    for part in parts[:-1]:
        target = target.setdefault(part, dict())
        if not isinstance(target, dict):
            raise ConfigError(f"{part} must be a mapping, got {target!r}")
    target[parts[-1]] = value


@yaml_info(yaml_tag="ExperimentConfig")
class ExperimentConfig(YamlAble):
    """Validated experiment settings

    Built from a nested mapping laid out like the config file. Values
    missing from the mapping take their DEFAULTS"""

    def __init__(self, settings: Optional[Dict[str, Any]] = None):

        resolved = _merge(DEFAULTS, dict() if settings is None else settings)
        self.settings: Dict[str, Any] = resolved

        try:
            self.suite: Suite = Suite(resolved["suite"])
        except ValueError:
            names = ", ".join(suite.value for suite in Suite)
            raise ConfigError(f"suite: unknown suite {resolved['suite']!r},"
                              f" expected one of {names}")
        self.seed: int = resolved["seed"]
        self.output_dir: Path = Path(resolved["output_dir"])
        self.record_timings: bool = resolved["record_timings"]

        grid = resolved["grid"]
        try:
            self.grid: TorusGrid = TorusGrid(grid["dim"], grid["L"],
                                             grid["n"])
        except ValueError as e:
            raise ConfigError(f"grid: {e}") from e
        pde = resolved["pde"]
        try:
            self.params: PdeParams = PdeParams(nu=pde["nu"],
                                               alpha=pde["alpha"],
                                               p=pde["p"],
                                               mu=pde["mu"],
                                               lam=pde["lambda"],
                                               dim=self.grid.dim)
        except ValueError as e:
            raise ConfigError(f"pde: {e}") from e

        self.initial_data: InitialData = resolved["initial_data"]
        if isinstance(self.initial_data, list):
            for i, entry in enumerate(self.initial_data):
                if len(entry["mode"]) != self.grid.dim:
                    raise ConfigError(f"initial_data[{i}].mode"
                                      f" {entry['mode']} does not match"
                                      f" grid.dim {self.grid.dim}")

        run = resolved["run"]
        for key in ("dt", "t_end"):
            if not run[key] > 0:
                raise ConfigError(f"run.{key} must be positive,"
                                  f" got {run[key]}")
        self.dt: float = run["dt"]
        self.t_end: float = run["t_end"]
        self.dealias: Optional[bool] = run["dealias"]

        counts = {"run.record_every": run["record_every"],
                  "picard.k_max": resolved["picard"]["k_max"]}
        counts.update({f"samples.{key}": value
                       for key, value in resolved["samples"].items()})
        for key, value in counts.items():
            if value < 1:
                raise ConfigError(f"{key} must be >= 1, got {value}")
        if counts["picard.k_max"] < 3:
            raise ConfigError("picard.k_max must be >= 3 for the"
                              f" contraction check, got"
                              f" {counts['picard.k_max']}")
        self.record_every: int = run["record_every"]
        self.k_max: int = resolved["picard"]["k_max"]
        samples = resolved["samples"]
        self.pair_samples: int = samples["pairs"]
        self.holder_samples: int = samples["holder"]
        self.random_fields: int = samples["random_fields"]
        self.shell_cutoff: int = samples["shell_cutoff"]

    def initial_field(self, grid: Optional[TorusGrid] = None) -> TorusField:
        """theta0 sampled on grid, the configured grid by default"""

        return build_initial_data(self.grid if grid is None else grid,
                                  self.initial_data)

    def solver_config(self,
                      params: Optional[PdeParams] = None,
                      grid: Optional[TorusGrid] = None,
                      **changes: Any) -> SolverConfig:
        kwargs: Dict[str, Any] = {"dt": self.dt,
                                  "t_end": self.t_end,
                                  "dealias": self.dealias,
                                  "record_every": self.record_every,
                                  "pair_samples": self.pair_samples,
                                  "seed": self.seed,
                                  "holder_samples": self.holder_samples}
        kwargs.update(changes)
        return SolverConfig(self.params if params is None else params,
                            self.grid if grid is None else grid,
                            **kwargs)

    def to_dict(self) -> Dict[str, Any]:
        return deepcopy(self.settings)

    def __repr__(self) -> str:
        return (f"ExperimentConfig(suite={self.suite.value},"
                f" {self.params!r}, {self.grid!r})")

##############
# Yaml funcs #
##############

    def __to_yaml_dict__(self) -> Dict[str, Any]:
        """ This optional method is called when you call yaml.dump()"""

        return self.to_dict()

    @classmethod
    def __from_yaml_dict__(cls, dct: Dict[Any, Any], yaml_tag: str):
        """ This optional method is called when you call yaml.load()"""

        return cls(dct)


def parse_config(path: Optional[Union[str, Path]] = None,
                 overrides: Optional[Dict[str, Any]] = None
                 ) -> ExperimentConfig:
    """Loads path (plain or a report's tagged config.yaml), applies the
    dotted-key overrides and validates. None overrides are skipped"""

    loaded: Any = dict()
    if path is not None:
        path = Path(path)
        if not path.is_file():
            raise ConfigError(f"config file {path} does not exist")
        text = path.read_text()
        if text.lstrip().startswith("!"):
            loaded = ExperimentConfig.loads_yaml(text).to_dict()
        else:
            try:
                loaded = yaml.safe_load(text)
            except yaml.YAMLError as e:
                raise ConfigError(f"{path} is not valid YAML: {e}") from e
            if loaded is None:
                loaded = dict()
            elif not isinstance(loaded, dict):
                raise ConfigError(f"{path} must hold a mapping,"
                                  f" got {type(loaded).__name__}")
    for dotted, value in (overrides or dict()).items():
        if value is not None:
            _set_dotted(loaded, dotted, value)
    return ExperimentConfig(loaded)


__all__ = ["DEFAULTS", "ExperimentConfig", "parse_config"]
