from .pde_params import PdeParams
from .picard_bound_error import PicardBoundError
from .picard_constants import PicardConstants
from .picard_constants import compute_constants, existence_time
from .picard_map import picard_forcing, picard_map
from .picard_map import trajectory_difference, x_norm
from .picard_sequence import PicardSequence
from .contraction_funcs import verify_contraction, check_fixed_point
from .picard_iteration import iterate, BOUND_SLACK
from .continuous_dependence import ContinuousDependenceReport
from .continuous_dependence import continuous_dependence_experiment
from .continuous_dependence import dependence_constant, w1inf_norm

__all__ = ["PdeParams",
           "PicardBoundError",
           "PicardConstants",
           "compute_constants",
           "existence_time",
           "picard_forcing",
           "picard_map",
           "trajectory_difference",
           "x_norm",
           "PicardSequence",
           "verify_contraction",
           "check_fixed_point",
           "iterate",
           "BOUND_SLACK",
           "ContinuousDependenceReport",
           "continuous_dependence_experiment",
           "dependence_constant",
           "w1inf_norm"]
