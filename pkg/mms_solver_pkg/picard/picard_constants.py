from typing import Any, Dict

from yamlable import yaml_info, YamlAble

from .pde_params import PdeParams
from ..fields import TorusField


@yaml_info(yaml_tag="PicardConstants")
class PicardConstants(YamlAble):
    """Uniform bounds and existence time of the Picard iteration"""

    def __init__(self,
                 M0: float,
                 M1: float,
                 kappa0: float,
                 T0: float,
                 c_dalpha: float):

        for name, value in (("M0", M0), ("M1", M1), ("kappa0", kappa0),
                            ("T0", T0), ("c_dalpha", c_dalpha)):
            assert value > 0, f"{name} must be positive, got {value}"
        self.M0: float = float(M0)
        self.M1: float = float(M1)
        self.kappa0: float = float(kappa0)
        self.T0: float = float(T0)
        self.c_dalpha: float = float(c_dalpha)

    def __repr__(self) -> str:
        return (f"PicardConstants(M0={self.M0:.6g}, M1={self.M1:.6g},"
                f" kappa0={self.kappa0:.6g}, T0={self.T0:.6g})")

##############
# Yaml funcs #
##############

    def __to_yaml_dict__(self) -> Dict[str, Any]:
        """ This optional method is called when you call yaml.dump()"""

        return {"M0": self.M0,
                "M1": self.M1,
                "kappa0": self.kappa0,
                "T0": self.T0,
                "c_dalpha": self.c_dalpha}

    @classmethod
    def __from_yaml_dict__(cls, dct: Dict[Any, Any], yaml_tag: str):
        """ This optional method is called when you call yaml.load()"""

        return cls(**dct)


def existence_time(nu: float, kappa0: float) -> float:
    """T0 = min(nu / kappa0^2, 1 / kappa0) / 16"""

    return min(nu / kappa0 ** 2, 1 / kappa0) / 16


def compute_constants(theta0: TorusField,
                      params: PdeParams) -> PicardConstants:
    """M0, M1, kappa0 and T0 from the data, with C_{d,a} in closed form"""

    c_dalpha = params.order.c_dalpha
    alpha, p = params.alpha, params.p
    M0 = 1 + theta0.linf_norm()
    M1 = 1 + theta0.lipschitz_estimate()
    kappa0 = c_dalpha * (2 * p * abs(params.lam) * M1 ** p
                         + params.mu * M0 ** (1 - 2 * alpha)
                         * M1 ** (2 * alpha))
    # lambda = mu = 0 gives kappa0 = 0 and an unbounded T0
    if kappa0 == 0:
        kappa0 = c_dalpha
    T0 = existence_time(params.nu, kappa0)
    return PicardConstants(M0, M1, kappa0, T0, c_dalpha)


__all__ = ["PicardConstants", "existence_time", "compute_constants"]
