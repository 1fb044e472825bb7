from .torus_grid import TorusGrid
from .torus_field import TorusField
from .pair_sample import PairSample, PairBatch
from .pair_sample import sample_pairs, near_diagonal_pairs, pair_arrays
from .pair_sample import dyadic_bin
from .derivative_funcs import gradient, linf_norm, lipschitz_estimate
from .derivative_funcs import holder_seminorm, gradient_power

__all__ = ["TorusGrid",
           "TorusField",
           "PairSample",
           "PairBatch",
           "sample_pairs",
           "near_diagonal_pairs",
           "pair_arrays",
           "dyadic_bin",
           "gradient",
           "linf_norm",
           "lipschitz_estimate",
           "holder_seminorm",
           "gradient_power"]
