from typing import Any, Callable, Optional, Sequence, Union

import numpy as np

from .torus_grid import TorusGrid

# Can't import into class due to mypy issue:
# https://github.com/python/mypy/issues/7045
# Derivative funcs
from .derivative_funcs import gradient
from .derivative_funcs import linf_norm
from .derivative_funcs import lipschitz_estimate
from .derivative_funcs import gradient_power
from .derivative_funcs import holder_seminorm
from .derivative_funcs import _gradient_spectral


class TorusField:
    """Real scalar field sampled on a TorusGrid

    Values are frozen after construction. The spectral representation
    is computed on first access and cached.
    """

    __slots__ = ("_grid", "_values", "_spectral")

    # Derivative funcs
    gradient = gradient
    linf_norm = linf_norm
    lipschitz_estimate = lipschitz_estimate
    gradient_power = gradient_power
    holder_seminorm = holder_seminorm
    _gradient_spectral = _gradient_spectral

    def __init__(self,
                 grid: TorusGrid,
                 values: np.ndarray,
                 spectral: Optional[np.ndarray] = None):

        values = np.array(values, dtype=float)
        if values.shape != grid.shape:
            raise ValueError(f"values have shape {values.shape},"
                             f" grid expects {grid.shape}")
        if not np.all(np.isfinite(values)):
            raise ValueError("field values must be finite")
        values.setflags(write=False)
        self._grid: TorusGrid = grid
        self._values: np.ndarray = values
        self._spectral: Optional[np.ndarray] = spectral

    @classmethod
    def from_function(cls,
                      grid: TorusGrid,
                      fn: Callable[..., np.ndarray]) -> "TorusField":
        """Samples fn(x1, ..., xd) at the grid coordinates"""

        values = np.broadcast_to(fn(*grid.coordinates), grid.shape)
        return cls(grid, values)

    @classmethod
    def from_spectral(cls,
                      grid: TorusGrid,
                      spectral: np.ndarray) -> "TorusField":
        """Builds the real field whose Fourier coefficients are given"""

        values = np.fft.ifftn(spectral).real
        return cls(grid, values)

    @classmethod
    def constant(cls, grid: TorusGrid, value: float = 0.0) -> "TorusField":
        return cls(grid, np.full(grid.shape, float(value)))

    @classmethod
    def from_modes(cls,
                   grid: TorusGrid,
                   modes: Sequence[Any]) -> "TorusField":
        """Sum of amplitude * sin(k . x + phase) over (amp, k, phase)"""

        values = np.zeros(grid.shape)
        for amplitude, mode, phase in modes:
            mode = tuple(mode)
            if len(mode) != grid.dim:
                raise ValueError(f"mode {mode} does not match dim {grid.dim}")
            # Integer modes are periodic on [0, L)
            scale = 2 * np.pi / grid.period
            phase_arr = sum(scale * k * x
                            for k, x in zip(mode, grid.coordinates))
            values = values + amplitude * np.sin(phase_arr + phase)
        return cls(grid, values)

    @classmethod
    def random_band_limited(cls,
                            grid: TorusGrid,
                            max_mode: int,
                            seed: int,
                            amplitude: float = 1.0) -> "TorusField":
        """Random real field with modes |k_j| <= max_mode, sup = amplitude"""

        rng = np.random.default_rng(seed)
        n = grid.points_per_axis
        index = np.abs(np.fft.fftfreq(n, d=1 / n))
        keep = np.logical_and.reduce(
            np.meshgrid(*([index <= max_mode] * grid.dim), indexing="ij"))
        coeffs = (rng.standard_normal(grid.shape)
                  + 1j * rng.standard_normal(grid.shape)) * keep
        values = np.fft.ifftn(coeffs).real
        peak = np.max(np.abs(values))
        if peak == 0:
            return cls.constant(grid)
        return cls(grid, amplitude * values / peak)

    @property
    def grid(self) -> TorusGrid:
        return self._grid

    @property
    def values(self) -> np.ndarray:
        """Read only sample array"""

        return self._values

    @property
    def spectral(self) -> np.ndarray:
        """Fourier coefficients (numpy fftn normalization)"""

        if self._spectral is None:
            self._spectral = np.fft.fftn(self._values)
            self._spectral.setflags(write=False)
        return self._spectral

    @property
    def mean(self) -> float:
        return float(np.mean(self._values))

    def shift(self, cells: Union[int, Sequence[int]]) -> "TorusField":
        """Translates the field by whole grid cells along each axis"""

        if isinstance(cells, int):
            cells = (cells,) * self._grid.dim
        axes = tuple(range(self._grid.dim))
        return TorusField(self._grid,
                          np.roll(self._values, tuple(cells), axis=axes))

    def map_spectral(self, multiplier: np.ndarray) -> "TorusField":
        """Multiplies every Fourier coefficient by multiplier"""

        return TorusField.from_spectral(self._grid, self.spectral * multiplier)

    def _check_grid(self, other: "TorusField"):
        if other.grid != self._grid:
            raise ValueError("fields live on different grids")

    def __add__(self, other: Any) -> "TorusField":
        if isinstance(other, TorusField):
            self._check_grid(other)
            return TorusField(self._grid, self._values + other.values)
        elif isinstance(other, (int, float)):
            return TorusField(self._grid, self._values + other)
        else:
            return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: Any) -> "TorusField":
        if isinstance(other, TorusField):
            self._check_grid(other)
            return TorusField(self._grid, self._values - other.values)
        elif isinstance(other, (int, float)):
            return TorusField(self._grid, self._values - other)
        else:
            return NotImplemented

    def __mul__(self, other: Any) -> "TorusField":
        if isinstance(other, (int, float)):
            return TorusField(self._grid, self._values * other)
        else:
            return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> "TorusField":
        return TorusField(self._grid, -self._values)

    def __repr__(self) -> str:
        return f"TorusField({self._grid!r}, linf={self.linf_norm():.6g})"


__all__ = ["TorusField"]
