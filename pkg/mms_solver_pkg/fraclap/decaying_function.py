from math import gamma, log, pi, sqrt
from typing import Callable

import numpy as np


PointFunc = Callable[[np.ndarray], float]
VectorFunc = Callable[[np.ndarray], np.ndarray]


class DecayingFunction:
    """Smooth rapidly decaying function on R^d in closed form

    Evaluators take a point of shape (d,). |value| < 1e-14 outside
    radius"""

    __slots__ = ("dim", "value", "gradient", "hessian", "radius",
                 "sup_norm", "integral", "name")

    def __init__(self,
                 dim: int,
                 value: PointFunc,
                 gradient: VectorFunc,
                 hessian: VectorFunc,
                 radius: float,
                 sup_norm: float,
                 integral: float,
                 name: str = "fn"):

        self.dim: int = dim
        self.value: PointFunc = value
        self.gradient: VectorFunc = gradient
        self.hessian: VectorFunc = hessian
        self.radius: float = radius
        self.sup_norm: float = sup_norm
        self.integral: float = integral
        self.name: str = name

    @classmethod
    def gaussian(cls,
                 dim: int,
                 amplitude: float = 1.0,
                 width: float = 1.0) -> "DecayingFunction":
        """amplitude * exp(-|x|^2 / width^2)"""

        inv = 1 / width ** 2

        def value(x: np.ndarray) -> float:
            return float(amplitude * np.exp(-inv * np.dot(x, x)))

        def grad(x: np.ndarray) -> np.ndarray:
            return -2 * inv * np.asarray(x) * value(x)

        def hessian(x: np.ndarray) -> np.ndarray:
            x = np.asarray(x, dtype=float)
            return (4 * inv ** 2 * np.outer(x, x)
                    - 2 * inv * np.eye(dim)) * value(x)

        # exp(-r^2 / w^2) |A| < 1e-14 beyond this radius
        cutoff = max(log(abs(amplitude) * 1e14), 0.0)
        radius = width * sqrt(cutoff)
        integral = amplitude * (pi * width ** 2) ** (dim / 2)
        return cls(dim, value, grad, hessian, radius, abs(amplitude),
                   integral, name="gaussian")

    @classmethod
    def zero(cls, dim: int) -> "DecayingFunction":
        return cls(dim,
                   lambda x: 0.0,
                   lambda x: np.zeros(dim),
                   lambda x: np.zeros((dim, dim)),
                   radius=0.0, sup_norm=0.0, integral=0.0, name="zero")


def gaussian_fractional_laplacian_at_origin(dim: int, alpha: float) -> float:
    """(-Laplacian)^a exp(-|x|^2) at x = 0, which equals
    4^a Gamma(d/2 + a) / Gamma(d/2)"""

    return 4 ** alpha * gamma(dim / 2 + alpha) / gamma(dim / 2)


__all__ = ["DecayingFunction", "gaussian_fractional_laplacian_at_origin"]
