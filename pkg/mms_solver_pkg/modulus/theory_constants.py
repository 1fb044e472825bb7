from typing import Any, Dict, List, Optional, Tuple

from yamlable import yaml_info, YamlAble

from ..picard.picard_constants import PicardConstants


# Formula ids of the constants file, in file order
FORMULAS: Dict[str, str] = {
    "M0": "1 + |theta0|_inf",
    "M1": "1 + |grad theta0|_inf",
    "kappa0": "C (2 p |lambda| M1^p + mu M0^(1-2a) M1^(2a))",
    "T0": "min(nu / kappa0^2, 1 / kappa0) / 16",
    "c_dalpha": "closed form C_{d,a}",
    "B": "omega(B) > max(2 |theta0|_inf + 1, |grad theta0|_inf + 1)",
    "delta0": "largest xi <= min(1/B, (nu (1-2a) / (mu C |S|))^(1/(1-a)))"
              " with 4 nu omega_B'' + K B xi^(1-2a) / (1-2a) < 0",
    "C0": "K / omega_B(delta0) (B^(2a-1) / delta0 + B^a / delta0^a"
          " + B delta0^(1-2a) / (1-2a))"}


@yaml_info(yaml_tag="TheoryConstants")
class TheoryConstants(YamlAble):
    """Every constant of the gradient bound construction"""

    def __init__(self,
                 c_dalpha: float,
                 B: float,
                 delta0: float,
                 C0: float,
                 picard: Optional[PicardConstants] = None):

        self.c_dalpha: float = float(c_dalpha)
        self.B: float = float(B)
        self.delta0: float = float(delta0)
        self.C0: float = float(C0)
        self.picard: Optional[PicardConstants] = picard

    def rows(self) -> List[Tuple[str, float, str]]:
        """(name, value, formula) per constant"""

        values: Dict[str, float] = dict()
        if self.picard is not None:
            values.update({"M0": self.picard.M0,
                           "M1": self.picard.M1,
                           "kappa0": self.picard.kappa0,
                           "T0": self.picard.T0})
        values.update({"c_dalpha": self.c_dalpha,
                       "B": self.B,
                       "delta0": self.delta0,
                       "C0": self.C0})
        return [(name, value, FORMULAS[name])
                for name, value in values.items()]

    def __repr__(self) -> str:
        return (f"TheoryConstants(B={self.B:.6g}, delta0={self.delta0:.6g},"
                f" C0={self.C0:.6g})")

##############
# Yaml funcs #
##############

    def __to_yaml_dict__(self) -> Dict[str, Any]:
        """ This optional method is called when you call yaml.dump()"""

        return {"c_dalpha": self.c_dalpha,
                "B": self.B,
                "delta0": self.delta0,
                "C0": self.C0,
                "picard": self.picard}

    @classmethod
    def __from_yaml_dict__(cls, dct: Dict[Any, Any], yaml_tag: str):
        """ This optional method is called when you call yaml.load()"""

        return cls(**dct)


__all__ = ["TheoryConstants", "FORMULAS"]
