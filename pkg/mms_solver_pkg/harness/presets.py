"""Initial data presets and the gradient bound sweep

Named data:
    sin       sin(x_1), the desk datum
    zero      theta0 = 0
    mixed     three modes with phases
    sawtooth  band limited sawtooth, W^{1,inf} but rough at grid scale
"""

from math import pi
from typing import Any, Dict, List, Tuple, Union

from ..fields import TorusField, TorusGrid
from ..picard import PdeParams


# Either a preset name or a list of {amplitude, mode, phase} mappings
InitialData = Union[str, List[Dict[str, Any]]]

PRESET_NAMES: Tuple[str, ...] = ("sin", "zero", "mixed", "sawtooth")

# Highest sawtooth mode when the grid resolves it
SAWTOOTH_MODES = 42


def _unit(dim: int, axis: int = 0, k: int = 1) -> Tuple[int, ...]:
    mode = [0] * dim
    mode[axis] = k
    return tuple(mode)


def _mixed_modes(dim: int) -> List[Tuple[float, Tuple[int, ...], float]]:
    if dim == 1:
        return [(1.0, (1,), 0.0), (0.5, (2,), 0.7), (0.25, (3,), 1.3)]
    return [(1.0, (1, 0), 0.0), (0.5, (1, 1), 0.7), (0.25, (0, 2), 1.3)]


def sawtooth(grid: TorusGrid) -> TorusField:
    """0.05 sum_{k <= K} sin(k x_1) / k with K below the 2/3 cutoff"""

    top = min(SAWTOOTH_MODES, grid.points_per_axis // 3)
    modes = [(0.05 / k, _unit(grid.dim, k=k), 0.0)
             for k in range(1, top + 1)]
    return TorusField.from_modes(grid, modes)


def build_initial_data(grid: TorusGrid, data: InitialData) -> TorusField:
    """theta0 on grid from a preset name or a mode list"""

    if isinstance(data, str):
        if data == "sin":
            return TorusField.from_modes(grid, [(1.0, _unit(grid.dim), 0.0)])
        elif data == "zero":
            return TorusField.constant(grid)
        elif data == "mixed":
            return TorusField.from_modes(grid, _mixed_modes(grid.dim))
        elif data == "sawtooth":
            return sawtooth(grid)
        else:
            raise ValueError(f"unknown initial data preset {data!r},"
                             f" expected one of {PRESET_NAMES}")
    modes = [(float(entry.get("amplitude", 1.0)),
              tuple(entry["mode"]),
              float(entry.get("phase", 0.0))) for entry in data]
    return TorusField.from_modes(grid, modes)


class TheoremPreset:
    """One configuration of the gradient bound sweep

    theta0 = 0.5 sin x in one dimension, 0.5 (sin x + cos y) in two"""

    def __init__(self, params: PdeParams, points_per_axis: int):
        self.params: PdeParams = params
        self.points_per_axis: int = points_per_axis

    @property
    def name(self) -> str:
        params = self.params
        sign = "plus" if params.lam > 0 else "minus"
        return f"d{params.dim}_p{params.p:g}_a{params.alpha:g}_{sign}"

    @property
    def grid(self) -> TorusGrid:
        return TorusGrid(self.params.dim, 2 * pi, self.points_per_axis)

    def initial_data(self) -> TorusField:
        grid = self.grid
        if grid.dim == 1:
            return TorusField.from_modes(grid, [(0.5, (1,), 0.0)])
        return TorusField.from_modes(grid, [(0.5, (1, 0), 0.0),
                                            (0.5, (0, 1), pi / 2)])

    def __repr__(self) -> str:
        return f"TheoremPreset({self.name})"


def _preset(dim: int, lam: float, p: float, alpha: float) -> TheoremPreset:
    params = PdeParams(nu=1.0, alpha=alpha, p=p, mu=1.0, lam=lam, dim=dim)
    return TheoremPreset(params, 256 if dim == 1 else 64)


THEOREM_PRESETS: Tuple[TheoremPreset, ...] = (
    _preset(1, 1.0, 2.0, 0.25),
    _preset(1, -1.0, 2.0, 0.1),
    _preset(1, 1.0, 1.0, 0.25),
    _preset(1, -1.0, 3.0, 0.25),
    _preset(2, 1.0, 2.0, 0.1),
    _preset(2, -1.0, 3.0, 0.25))


__all__ = ["InitialData",
           "PRESET_NAMES",
           "SAWTOOTH_MODES",
           "sawtooth",
           "build_initial_data",
           "TheoremPreset",
           "THEOREM_PRESETS"]
