# modulus first: fraclap.lemma_check_funcs imports modulus.modulus
from .modulus import Modulus, omega_base
from .modulus_construction_error import ModulusConstructionError
from .breakthrough_report import BreakthroughReport
from .breakthrough_funcs import breakthrough_scan
from .time_modulus import TimeModulus
from .theory_constants import TheoryConstants
from .construction import fit_B, construct_constants
from .construction import assemble_time_modulus, strict_margin
from .construction import delta0_cap, dissipation_sign
from .construction import STRICT_GAP, MAX_DOUBLINGS
from .checks import check_dissipation_inequality, check_tail_bound
from .checks import touching_profile, check_touching_derivatives
from .checks import check_gradient_strict_bound

__all__ = ["Modulus",
           "omega_base",
           "ModulusConstructionError",
           "BreakthroughReport",
           "breakthrough_scan",
           "TimeModulus",
           "TheoryConstants",
           "fit_B",
           "construct_constants",
           "assemble_time_modulus",
           "strict_margin",
           "delta0_cap",
           "dissipation_sign",
           "STRICT_GAP",
           "MAX_DOUBLINGS",
           "check_dissipation_inequality",
           "check_tail_bound",
           "touching_profile",
           "check_touching_derivatives",
           "check_gradient_strict_bound"]
