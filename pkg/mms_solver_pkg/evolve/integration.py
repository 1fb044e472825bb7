from typing import Any, Optional

from .pseudo_spectral_solver import PseudoSpectralSolver
from .run_report import RunReport
from .solver_config import SolverConfig
from ..fields import TorusField


def step(theta: TorusField,
         config: SolverConfig,
         t: float = 0.0) -> TorusField:
    """One ETD2RK step of size config.dt"""

    return PseudoSpectralSolver(config).step(theta, t)


def run(theta0: TorusField,
        config: SolverConfig,
        modulus_hook: Optional[Any] = None,
        keep_states: bool = False) -> RunReport:
    return PseudoSpectralSolver(config).run(theta0, modulus_hook,
                                            keep_states)


__all__ = ["step", "run"]
