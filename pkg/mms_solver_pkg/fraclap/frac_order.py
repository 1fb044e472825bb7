from functools import lru_cache
from math import cos, gamma, inf, pi, sin
from typing import Any, Dict, Tuple

from scipy.integrate import quad
from yamlable import yaml_info, YamlAble

from .quadrature_error import QuadratureError


def sphere_area(dim: int) -> float:
    """Surface measure |S^{d-1}| of the unit sphere in R^d"""

    return 2 * pi ** (dim / 2) / gamma(dim / 2)


def closed_form_c_dalpha(dim: int, alpha: float) -> float:
    """4^a Gamma(d/2 + a) / (pi^{d/2} |Gamma(-a)|)"""

    return (4 ** alpha * gamma(dim / 2 + alpha)
            / (pi ** (dim / 2) * abs(gamma(-alpha))))


def _one_dim_symbol_integral(alpha: float) -> float:
    """int_R (1 - cos z) |z|^{-1-2a} dz by adaptive quadrature

    Split at A = 2 pi. The head is smooth apart from the z^{1-2a}
    behaviour at 0. The tail is int_A^inf z^{-1-2a} dz, done exactly,
    minus a Fourier integral handled by QAWF"""

    s = 1 + 2 * alpha
    split = 2 * pi
    head, head_err = quad(lambda z: 2 * sin(z / 2) ** 2 * z ** (-s),
                          0, split, limit=200, epsabs=0, epsrel=1e-12)
    flat = split ** (-2 * alpha) / (2 * alpha)
    oscillating, osc_err = quad(lambda z: z ** (-s), split, inf,
                                weight="cos", wvar=1.0,
                                epsabs=1e-13, limlst=100)
    value = 2 * (head + flat - oscillating)
    if head_err + osc_err > 1e-9 * value:
        raise QuadratureError(f"symbol integral for alpha={alpha} did not"
                              f" converge: error {head_err + osc_err}")
    return value


def constant_c_dalpha(dim: int, alpha: float) -> float:
    """Reciprocal of g(e_1) = int_{R^d} (1 - cos z_1) / |z|^{d+2a} dz

    The transverse (d-1)-dimensional integral is done in closed form:
    int (z_1^2 + |w|^2)^{-(d+2a)/2} dw
        = |z_1|^{-1-2a} pi^{(d-1)/2} Gamma(1/2 + a) / Gamma(d/2 + a)
    which leaves a one dimensional Fourier integral."""

    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    transverse = (pi ** ((dim - 1) / 2) * gamma(0.5 + alpha)
                  / gamma(dim / 2 + alpha))
    return 1 / (transverse * _one_dim_symbol_integral(alpha))


def symbol_integral_closed_form(alpha: float) -> float:
    """Closed form of the one dimensional symbol integral, for checks"""

    return -2 * gamma(-2 * alpha) * cos(pi * alpha)


@yaml_info(yaml_tag="FracOrder")
class FracOrder(YamlAble):
    """Order alpha and dimension d of (-Laplacian)^alpha

    alpha is restricted to (0, 1/2) unless supercritical is set, which
    admits (0, 1) for the whole space decay quadrature only"""

    def __init__(self, alpha: float, dim: int, supercritical: bool = False):
        upper = 1.0 if supercritical else 0.5
        if not 0 < alpha < upper:
            interval = "(0, 1)" if supercritical else "(0, 1/2)"
            raise ValueError(f"alpha must lie in {interval}, got {alpha}")
        if dim not in (1, 2):
            raise ValueError(f"dim must be 1 or 2, got {dim}")
        self.__alpha: float = float(alpha)
        self.__dim: int = int(dim)
        self.__supercritical: bool = bool(supercritical)

    @property
    def alpha(self) -> float:
        return self.__alpha

    @property
    def dim(self) -> int:
        return self.__dim

    @property
    def supercritical(self) -> bool:
        return self.__supercritical

    @property
    def c_dalpha(self) -> float:
        """Normalizing constant making the Fourier symbol |k|^{2 alpha}"""

        return _cached_closed_form(self.__dim, self.__alpha)

    @property
    def sphere_area(self) -> float:
        return sphere_area(self.__dim)

    @property
    def _key(self) -> Tuple[float, int, bool]:
        return (self.__alpha, self.__dim, self.__supercritical)

    def __eq__(self, other: Any):
        if isinstance(other, FracOrder):
            return self._key == other._key
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"FracOrder(alpha={self.alpha}, dim={self.dim})"

##############
# Yaml funcs #
##############

    def __to_yaml_dict__(self) -> Dict[str, Any]:
        """ This optional method is called when you call yaml.dump()"""

        return {"alpha": self.alpha,
                "dim": self.dim,
                "supercritical": self.supercritical}

    @classmethod
    def __from_yaml_dict__(cls, dct: Dict[Any, Any], yaml_tag: str):
        """ This optional method is called when you call yaml.load()"""

        return cls(**dct)


@lru_cache(maxsize=None)
def _cached_closed_form(dim: int, alpha: float) -> float:
    return closed_form_c_dalpha(dim, alpha)


def interpolation_constant(order: FracOrder) -> float:
    """C_{d,a} |S^{d-1}| / (a (1 - 2a)), the L-infinity interpolation
    constant for (-Laplacian)^a"""

    alpha = order.alpha
    return (order.c_dalpha * order.sphere_area
            / (alpha * (1 - 2 * alpha)))


def transfer_constant(order: FracOrder) -> float:
    """C_{d,a} |S^{d-1}| / a, the factor in front of the modulus
    transfer integral"""

    return order.c_dalpha * order.sphere_area / order.alpha


__all__ = ["FracOrder",
           "constant_c_dalpha",
           "closed_form_c_dalpha",
           "symbol_integral_closed_form",
           "sphere_area",
           "interpolation_constant",
           "transfer_constant"]
