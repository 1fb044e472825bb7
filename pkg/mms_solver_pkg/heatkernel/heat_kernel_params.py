from math import pi
from typing import Any, Tuple

import numpy as np


class HeatKernelParams:
    """Viscosity and dimension of Psi(s, y) = (4 pi nu s)^{-d/2}
    exp(-|y|^2 / (4 nu s))"""

    __slots__ = ("__nu", "__dim")

    def __init__(self, nu: float, dim: int):
        if not nu > 0:
            raise ValueError(f"nu must be positive, got {nu}")
        if dim < 1:
            raise ValueError(f"dim must be >= 1, got {dim}")
        self.__nu: float = float(nu)
        self.__dim: int = int(dim)

    @property
    def nu(self) -> float:
        return self.__nu

    @property
    def dim(self) -> int:
        return self.__dim

    def density(self, s: float, radius: Any) -> Any:
        """Psi(s, y) at |y| = radius"""

        spread = 4 * self.__nu * s
        return ((pi * spread) ** (-self.__dim / 2)
                * np.exp(-np.square(radius) / spread))

    def radial_gradient(self, s: float, radius: Any) -> Any:
        """|grad Psi(s, y)| at |y| = radius"""

        return radius / (2 * self.__nu * s) * self.density(s, radius)

    def time_derivative(self, s: float, radius: Any) -> Any:
        """d/ds Psi(s, y) at |y| = radius"""

        return (self.density(s, radius)
                * (np.square(radius) / (4 * self.__nu * s ** 2)
                   - self.__dim / (2 * s)))

    @property
    def _key(self) -> Tuple[float, int]:
        return (self.__nu, self.__dim)

    def __eq__(self, other: Any):
        if isinstance(other, HeatKernelParams):
            return self._key == other._key
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"HeatKernelParams(nu={self.nu}, dim={self.dim})"


__all__ = ["HeatKernelParams"]
