from functools import cached_property
from math import pi, sqrt
from typing import Any, Dict, Tuple

import numpy as np
from yamlable import yaml_info, YamlAble


@yaml_info(yaml_tag="TorusGrid")
class TorusGrid(YamlAble):
    """Uniform periodic grid with N points per axis on [0, L)^d"""

    def __init__(self,
                 dim: int = 1,
                 period: float = 2 * pi,
                 points_per_axis: int = 256):

        if dim not in (1, 2):
            raise ValueError(f"dim must be 1 or 2, got {dim}")
        if not period > 0:
            raise ValueError(f"period must be positive, got {period}")
        n = int(points_per_axis)
        # Power of two check
        if n < 8 or n & (n - 1) != 0:
            raise ValueError("points_per_axis must be a power of two >= 8,"
                             f" got {points_per_axis}")

        self.__dim: int = int(dim)
        self.__period: float = float(period)
        self.__points_per_axis: int = n

    @property
    def dim(self) -> int:
        """Returns dim. Done this way for immutability/hashing"""

        return self.__dim

    @property
    def period(self) -> float:
        return self.__period

    @property
    def points_per_axis(self) -> int:
        return self.__points_per_axis

    @property
    def spacing(self) -> float:
        """Grid spacing h = L / N"""

        return self.__period / self.__points_per_axis

    @property
    def shape(self) -> Tuple[int, ...]:
        return (self.__points_per_axis,) * self.__dim

    @property
    def max_separation(self) -> float:
        """Largest torus distance between two points, sqrt(d) L / 2"""

        return sqrt(self.__dim) * self.__period / 2

    @cached_property
    def axis_wavenumbers(self) -> np.ndarray:
        """2 pi / L * {0, ..., N/2 - 1, -N/2, ..., -1} (fft ordering)"""

        n = self.__points_per_axis
        return 2 * pi / self.__period * np.fft.fftfreq(n, d=1 / n)

    @cached_property
    def wavevectors(self) -> Tuple[np.ndarray, ...]:
        """One array per axis, broadcast to the full grid shape"""

        axes = [self.axis_wavenumbers] * self.__dim
        return tuple(np.meshgrid(*axes, indexing="ij"))

    @cached_property
    def k_squared(self) -> np.ndarray:
        """|k|^2 on the full spectral grid"""

        return sum(k ** 2 for k in self.wavevectors)  # type: ignore

    @cached_property
    def k_max(self) -> float:
        """Largest wavenumber magnitude along an axis"""

        return float(np.max(np.abs(self.axis_wavenumbers)))

    @cached_property
    def nyquist_mask(self) -> Tuple[np.ndarray, ...]:
        """Per axis, True where the wavenumber is not the Nyquist mode"""

        n = self.__points_per_axis
        keep = np.ones(n, dtype=bool)
        keep[n // 2] = False
        return tuple(np.meshgrid(*([keep] * self.__dim), indexing="ij"))

    def dealias_mask(self) -> np.ndarray:
        """2/3 rule: keeps modes with |k_j| < N/3 on every axis"""

        n = self.__points_per_axis
        index = np.abs(np.fft.fftfreq(n, d=1 / n))
        keep = index < n / 3
        masks = np.meshgrid(*([keep] * self.__dim), indexing="ij")
        return np.logical_and.reduce(masks)

    @cached_property
    def coordinates(self) -> Tuple[np.ndarray, ...]:
        """Physical coordinates of the grid points, one array per axis"""

        x = self.spacing * np.arange(self.__points_per_axis)
        return tuple(np.meshgrid(*([x] * self.__dim), indexing="ij"))

    def torus_distance(self, offset: np.ndarray) -> np.ndarray:
        """Geodesic length of integer offsets (minimum image per axis)

        offset has the axis as its last dimension"""

        n = self.__points_per_axis
        wrapped = np.abs(np.asarray(offset))
        wrapped = np.minimum(wrapped % n, n - wrapped % n)
        return self.spacing * np.sqrt(np.sum(wrapped ** 2, axis=-1))

    def __eq__(self, other: Any):
        if isinstance(other, TorusGrid):
            return self._key == other._key
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self._key)

    @property
    def _key(self) -> Tuple[int, float, int]:
        return (self.__dim, self.__period, self.__points_per_axis)

    def __repr__(self) -> str:
        return (f"TorusGrid(dim={self.dim}, period={self.period},"
                f" points_per_axis={self.points_per_axis})")

##############
# Yaml funcs #
##############

    def __to_yaml_dict__(self) -> Dict[str, Any]:
        """ This optional method is called when you call yaml.dump()"""

        return {"dim": self.dim,
                "period": self.period,
                "points_per_axis": self.points_per_axis}

    @classmethod
    def __from_yaml_dict__(cls, dct: Dict[Any, Any], yaml_tag: str):
        """ This optional method is called when you call yaml.load()"""

        return cls(**dct)


__all__ = ["TorusGrid"]
