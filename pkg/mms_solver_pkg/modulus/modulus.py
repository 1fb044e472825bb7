from typing import Any, Callable, Union

import numpy as np


ArrayLike = Union[float, np.ndarray]
Evaluator = Callable[[np.ndarray], np.ndarray]


class Modulus:
    """Modulus of continuity with evaluators for omega, omega', omega''

    Evaluators are vectorized over xi >= 0. A strong modulus has
    0 < omega'(0) < inf and omega''(0+) = -inf."""

    __slots__ = ("__value", "__first", "__second", "__unbounded",
                 "__strong", "__derivative_at_zero", "__name")

    def __init__(self,
                 value: Evaluator,
                 first: Evaluator,
                 second: Evaluator,
                 derivative_at_zero: float,
                 unbounded: bool = True,
                 strong: bool = False,
                 name: str = "omega"):

        self.__value: Evaluator = value
        self.__first: Evaluator = first
        self.__second: Evaluator = second
        self.__derivative_at_zero: float = float(derivative_at_zero)
        self.__unbounded: bool = unbounded
        self.__strong: bool = strong
        self.__name: str = name

    @classmethod
    def linear(cls, slope: float = 1.0) -> "Modulus":
        """omega(xi) = slope * xi, the Lipschitz modulus"""

        return cls(lambda xi: slope * xi,
                   lambda xi: np.full_like(xi, slope),
                   lambda xi: np.zeros_like(xi),
                   derivative_at_zero=slope,
                   unbounded=slope > 0,
                   name="linear")

    @classmethod
    def zero(cls) -> "Modulus":
        zeros = np.zeros_like
        return cls(zeros, zeros, zeros, 0.0, unbounded=False, name="zero")

    @property
    def unbounded(self) -> bool:
        return self.__unbounded

    @property
    def strong(self) -> bool:
        return self.__strong

    @property
    def derivative_at_zero(self) -> float:
        return self.__derivative_at_zero

    @property
    def name(self) -> str:
        return self.__name

    def value(self, xi: ArrayLike) -> np.ndarray:
        return self.__value(np.asarray(xi, dtype=float))

    __call__ = value

    def first(self, xi: ArrayLike) -> np.ndarray:
        """omega'(xi)"""

        return self.__first(np.asarray(xi, dtype=float))

    def second(self, xi: ArrayLike) -> np.ndarray:
        """omega''(xi), -inf allowed at 0 for strong moduli"""

        return self.__second(np.asarray(xi, dtype=float))

    def rescaled(self, scale: float, amplitude: float = 1.0) -> "Modulus":
        """amplitude * omega(scale * xi)

        scale = B gives omega_B. scale = 1/2 with amplitude 2 turns an odd
        profile g into the touching modulus 2 g(xi / 2)"""

        assert scale > 0 and amplitude > 0, "rescaling must be positive"
        return Modulus(
            lambda xi: amplitude * self.__value(scale * xi),
            lambda xi: amplitude * scale * self.__first(scale * xi),
            lambda xi: (amplitude * scale ** 2
                        * self.__second(scale * xi)),
            derivative_at_zero=amplitude * scale * self.__derivative_at_zero,
            unbounded=self.__unbounded,
            strong=self.__strong,
            name=f"{amplitude:g}*{self.__name}({scale:g}xi)")

    def is_concave_on(self, xis: ArrayLike, tol: float = 1e-10) -> bool:
        """omega' >= 0 and omega'' <= 0 at every xi, to tol"""

        xis = np.asarray(xis, dtype=float)
        return bool(np.all(self.first(xis) >= -tol)
                    and np.all(self.second(xis) <= tol))

    def __repr__(self) -> str:
        return f"Modulus({self.__name})"

    def __eq__(self, other: Any):
        if isinstance(other, Modulus):
            return self is other
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return id(self)


def omega_base(alpha: float) -> Modulus:
    """omega(xi) = xi / (1 + xi^{1-a})

    Grows like xi^a, omega'(0) = 1 and omega''(xi) ~ -(1-a)(2-a) xi^{-a}
    near 0"""

    if not 0 < alpha < 0.5:
        raise ValueError(f"alpha must lie in (0, 1/2), got {alpha}")
    beta = 1 - alpha

    def value(xi: np.ndarray) -> np.ndarray:
        return xi / (1 + xi ** beta)

    def first(xi: np.ndarray) -> np.ndarray:
        power = xi ** beta
        return (1 + alpha * power) / (1 + power) ** 2

    def second(xi: np.ndarray) -> np.ndarray:
        power = xi ** beta
        with np.errstate(divide="ignore"):
            return (-beta * xi ** (-alpha) * (1 + beta + alpha * power)
                    / (1 + power) ** 3)

    return Modulus(value, first, second, derivative_at_zero=1.0,
                   unbounded=True, strong=True, name=f"base_{alpha:g}")


__all__ = ["Modulus", "omega_base"]
