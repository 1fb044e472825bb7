from .heat_kernel_params import HeatKernelParams
from .semigroup import heat_multiplier, heat_propagate
from .semigroup import duhamel_step, duhamel_trajectory
from .kernel_identities import KernelIdentityReport
from .kernel_identities import kernel_difference_integral
from .kernel_identities import verify_kernel_identities
from .kernel_identities import verify_periodization
from .gronwall import GronwallInstance, gronwall_bound
from .gronwall import premise_equality_solution
from .gronwall import continuous_dependence_instance

__all__ = ["HeatKernelParams",
           "heat_multiplier",
           "heat_propagate",
           "duhamel_step",
           "duhamel_trajectory",
           "KernelIdentityReport",
           "kernel_difference_integral",
           "verify_kernel_identities",
           "verify_periodization",
           "GronwallInstance",
           "gronwall_bound",
           "premise_equality_solution",
           "continuous_dependence_instance"]
