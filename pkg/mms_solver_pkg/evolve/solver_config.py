from math import ceil, inf
from typing import Callable, Optional, TYPE_CHECKING

from ..fields import TorusField, TorusGrid

if TYPE_CHECKING:
    from ..picard.pde_params import PdeParams


Source = Callable[[float], TorusField]


class SolverConfig:
    """Everything a PseudoSpectralSolver run needs besides the data

    dealias None means automatic: on for p in {2, 3}, off otherwise.
    source, when given, is added to the right hand side (manufactured
    solutions)."""

    def __init__(self,
                 params: "PdeParams",
                 grid: TorusGrid,
                 dt: float = 1e-3,
                 t_end: float = 5.0,
                 dealias: Optional[bool] = None,
                 record_every: int = 10,
                 source: Optional[Source] = None,
                 pair_samples: int = 10000,
                 seed: int = 0,
                 holder_beta: Optional[float] = None,
                 holder_samples: int = 10000,
                 gradient_threshold: float = 1e6,
                 overflow_threshold: float = 1e12):

        if params.dim != grid.dim:
            raise ValueError(f"params dim {params.dim} != grid dim"
                             f" {grid.dim}")
        if not dt > 0:
            raise ValueError(f"dt must be positive, got {dt}")
        if not t_end > 0:
            raise ValueError(f"t_end must be positive, got {t_end}")
        if record_every < 1:
            raise ValueError(f"record_every must be >= 1, got {record_every}")
        if pair_samples < 1:
            raise ValueError(f"pair_samples must be >= 1, got {pair_samples}")
        if holder_beta is not None and not 0 < holder_beta < 1:
            raise ValueError(f"holder_beta must lie in (0, 1),"
                             f" got {holder_beta}")

        self.params: "PdeParams" = params
        self.grid: TorusGrid = grid
        self.t_end: float = float(t_end)
        # Whole number of steps landing exactly on t_end
        self.steps: int = max(1, int(ceil(t_end / dt - 1e-9)))
        self.dt: float = self.t_end / self.steps
        self.dealias: bool = (params.p in (2, 3) if dealias is None
                              else bool(dealias))
        self.record_every: int = int(record_every)
        self.source: Optional[Source] = source
        self.pair_samples: int = int(pair_samples)
        self.seed: int = int(seed)
        self.holder_beta: Optional[float] = holder_beta
        self.holder_samples: int = int(holder_samples)
        self.gradient_threshold: float = float(gradient_threshold)
        self.overflow_threshold: float = float(overflow_threshold)

    def __repr__(self) -> str:
        return (f"SolverConfig({self.params!r}, {self.grid!r},"
                f" dt={self.dt:.6g}, t_end={self.t_end:.6g})")


def max_stable_dt(config: SolverConfig, lip: float) -> float:
    """1 / (2 p |lambda| lip^{p-1} k_max), the explicit stability limit
    of the nonlinear term"""

    params = config.params
    if params.lam == 0:
        return inf
    slope = params.p * abs(params.lam) * lip ** (params.p - 1)
    if slope == 0:
        return inf
    return 1 / (2 * slope * config.grid.k_max)


__all__ = ["SolverConfig", "max_stable_dt"]
