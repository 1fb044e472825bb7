from .stop_reason import StopReason
from .solver_overflow_error import SolverOverflowError
from .solver_config import SolverConfig, max_stable_dt
from .run_report import RunReport
from .stepping_funcs import phi_functions
from .pseudo_spectral_solver import PseudoSpectralSolver
from .integration import step, run
from .monitors import check_parabolic_smoothing
from .monitors import regularity_bound, regularity_monitor
from .monitors import growth_exponent
from .monitors import linear_mode_growth, linear_lipschitz

__all__ = ["StopReason",
           "SolverOverflowError",
           "SolverConfig",
           "max_stable_dt",
           "RunReport",
           "phi_functions",
           "PseudoSpectralSolver",
           "step",
           "run",
           "check_parabolic_smoothing",
           "regularity_bound",
           "regularity_monitor",
           "growth_exponent",
           "linear_mode_growth",
           "linear_lipschitz"]
