from typing import Any, Optional

import numpy as np

from .modulus import ArrayLike, Modulus

# Can't import into class due to mypy issue:
# https://github.com/python/mypy/issues/7045
# Breakthrough funcs
from .breakthrough_funcs import scan


class TimeModulus:
    """Omega(t, xi) = f(t) omega(B xi) with f(t) = e^{C0 t}

    Attached to a solver run, it supplies the gradient bound B e^{C0 t}
    and the breakthrough scan at each record"""

    # Breakthrough funcs
    scan = scan

    def __init__(self,
                 base: Modulus,
                 B: float,
                 C0: float,
                 constants: Optional[Any] = None):

        if not B > 0:
            raise ValueError(f"B must be positive, got {B}")
        if not C0 >= 0:
            raise ValueError(f"C0 must be nonnegative, got {C0}")
        self.base: Modulus = base
        self.B: float = float(B)
        self.C0: float = float(C0)
        self.omega_b: Modulus = base.rescaled(self.B)
        # TheoryConstants this modulus was assembled from, if any
        self.constants: Optional[Any] = constants

    def growth(self, t: ArrayLike) -> np.ndarray:
        """f(t) = e^{C0 t}, infinite once it overflows"""

        with np.errstate(over="ignore"):
            return np.exp(self.C0 * np.asarray(t, dtype=float))

    def value(self, t: ArrayLike, xi: ArrayLike) -> np.ndarray:
        with np.errstate(over="ignore", invalid="ignore"):
            return self.growth(t) * self.omega_b(xi)

    __call__ = value

    def first(self, t: ArrayLike, xi: ArrayLike) -> np.ndarray:
        """d Omega / d xi"""

        return self.growth(t) * self.omega_b.first(xi)

    def second(self, t: ArrayLike, xi: ArrayLike) -> np.ndarray:
        return self.growth(t) * self.omega_b.second(xi)

    def time_derivative(self, t: ArrayLike, xi: ArrayLike) -> np.ndarray:
        return self.C0 * self.value(t, xi)

    def gradient_bound(self, t: ArrayLike) -> float:
        """d Omega / d xi at xi = 0, i.e. B e^{C0 t} omega'(0)"""

        return float(self.growth(t) * self.omega_b.derivative_at_zero)

    def at_time(self, t: float) -> Modulus:
        """Omega(t, .) as a Modulus"""

        return self.omega_b.rescaled(1.0, float(self.growth(t)))

    def __repr__(self) -> str:
        return (f"TimeModulus({self.base.name}, B={self.B:.6g},"
                f" C0={self.C0:.6g})")


__all__ = ["TimeModulus"]
