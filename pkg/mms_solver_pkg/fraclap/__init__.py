from .quadrature_error import QuadratureError
from .margin_report import CheckGroup, MarginReport
from .frac_order import FracOrder
from .frac_order import constant_c_dalpha, closed_form_c_dalpha
from .frac_order import symbol_integral_closed_form, sphere_area
from .frac_order import interpolation_constant, transfer_constant
from .decaying_function import DecayingFunction
from .decaying_function import gaussian_fractional_laplacian_at_origin
from .fractional_laplacian import apply_spectral
from .fractional_laplacian import apply_lattice_sum
from .fractional_laplacian import apply_pv_quadrature
from .fractional_laplacian import lattice_sum_multiplier
from .fractional_laplacian import lattice_tail_estimate
from .fractional_laplacian import choose_shell_cutoff
from .fractional_laplacian import decay_profile
from .lemma_check_funcs import check_interpolation_bound
from .lemma_check_funcs import modulus_transfer
from .lemma_check_funcs import check_modulus_transfer

__all__ = ["QuadratureError",
           "MarginReport",
           "CheckGroup",
           "FracOrder",
           "constant_c_dalpha",
           "closed_form_c_dalpha",
           "symbol_integral_closed_form",
           "sphere_area",
           "interpolation_constant",
           "transfer_constant",
           "DecayingFunction",
           "gaussian_fractional_laplacian_at_origin",
           "apply_spectral",
           "apply_lattice_sum",
           "apply_pv_quadrature",
           "lattice_sum_multiplier",
           "lattice_tail_estimate",
           "choose_shell_cutoff",
           "decay_profile",
           "check_interpolation_bound",
           "modulus_transfer",
           "check_modulus_transfer"]
