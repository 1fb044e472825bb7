from math import isfinite
from typing import Any, Dict, Tuple

from yamlable import yaml_info, YamlAble

from ..fraclap.frac_order import FracOrder
from ..heatkernel.heat_kernel_params import HeatKernelParams


@yaml_info(yaml_tag="PdeParams")
class PdeParams(YamlAble):
    """Coefficients of

        d_t theta = nu Lap theta + lambda |grad theta|^p
                    + mu (-Lap)^alpha theta

    mu = 0 is accepted for the local viscous Hamilton-Jacobi runs"""

    def __init__(self,
                 nu: float = 1.0,
                 alpha: float = 0.25,
                 p: float = 2.0,
                 mu: float = 1.0,
                 lam: float = 1.0,
                 dim: int = 1):

        if not nu > 0:
            raise ValueError(f"nu must be positive, got {nu}")
        if not 0 < alpha < 0.5:
            raise ValueError(f"alpha must lie in (0, 1/2), got {alpha}")
        if not p >= 1:
            raise ValueError(f"p must be >= 1, got {p}")
        if not mu >= 0:
            raise ValueError(f"mu must be nonnegative, got {mu}")
        if not isfinite(lam):
            raise ValueError(f"lambda must be finite, got {lam}")
        if dim not in (1, 2):
            raise ValueError(f"dim must be 1 or 2, got {dim}")

        self.__nu: float = float(nu)
        self.__alpha: float = float(alpha)
        self.__p: float = float(p)
        self.__mu: float = float(mu)
        self.__lam: float = float(lam)
        self.__dim: int = int(dim)

    @property
    def nu(self) -> float:
        return self.__nu

    @property
    def alpha(self) -> float:
        return self.__alpha

    @property
    def p(self) -> float:
        return self.__p

    @property
    def mu(self) -> float:
        return self.__mu

    @property
    def lam(self) -> float:
        """lambda, renamed since lambda is a keyword"""

        return self.__lam

    @property
    def dim(self) -> int:
        return self.__dim

    @property
    def order(self) -> FracOrder:
        return FracOrder(self.__alpha, self.__dim)

    @property
    def heat(self) -> HeatKernelParams:
        return HeatKernelParams(self.__nu, self.__dim)

    def replace(self, **changes: Any) -> "PdeParams":
        """Copy with some coefficients changed"""

        kwargs = self.__to_yaml_dict__()
        kwargs["lam"] = kwargs.pop("lambda")
        kwargs.update(changes)
        return PdeParams(**kwargs)

    @property
    def _key(self) -> Tuple[float, float, float, float, float, int]:
        return (self.__nu, self.__alpha, self.__p, self.__mu, self.__lam,
                self.__dim)

    def __eq__(self, other: Any):
        if isinstance(other, PdeParams):
            return self._key == other._key
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return (f"PdeParams(nu={self.nu}, alpha={self.alpha}, p={self.p},"
                f" mu={self.mu}, lambda={self.lam}, dim={self.dim})")

##############
# Yaml funcs #
##############

    def __to_yaml_dict__(self) -> Dict[str, Any]:
        """ This optional method is called when you call yaml.dump()"""

        return {"nu": self.nu,
                "alpha": self.alpha,
                "p": self.p,
                "mu": self.mu,
                "lambda": self.lam,
                "dim": self.dim}

    @classmethod
    def __from_yaml_dict__(cls, dct: Dict[Any, Any], yaml_tag: str):
        """ This optional method is called when you call yaml.load()"""

        dct = dict(dct)
        if "lambda" in dct:
            dct["lam"] = dct.pop("lambda")
        return cls(**dct)


__all__ = ["PdeParams"]
