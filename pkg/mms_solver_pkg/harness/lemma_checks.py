"""Checks of the fractional Laplacian and modulus lemmas

Sweeps run over d in {1, 2} and alpha in {0.1, 0.25, 0.4} on their own
grids. The modulus checks use the configured data.
"""

from itertools import product
import logging
from typing import List, Union

import numpy as np

from .artifacts import initial_data, time_modulus
from .experiment_config import ExperimentConfig
from .suite_result import SuiteResult
from ..fields import TorusField, TorusGrid
from ..fraclap import CheckGroup, DecayingFunction, FracOrder, MarginReport
from ..fraclap import apply_lattice_sum, apply_pv_quadrature, apply_spectral
from ..fraclap import check_interpolation_bound, check_modulus_transfer
from ..fraclap import closed_form_c_dalpha, constant_c_dalpha, decay_profile
from ..fraclap import gaussian_fractional_laplacian_at_origin
from ..modulus import STRICT_GAP, check_dissipation_inequality
from ..modulus import check_gradient_strict_bound, check_tail_bound
from ..modulus import check_touching_derivatives, strict_margin
from ..modulus import touching_profile

Outcome = Union[MarginReport, CheckGroup]

SWEEP_DIMS = (1, 2)
SWEEP_ALPHAS = (0.1, 0.25, 0.4)
# Points per axis of the sweep grids
SWEEP_POINTS = {1: 64, 2: 32}
# Highest mode of the random band limited sweep fields
SWEEP_MAX_MODE = 4
# Periodic box for the spectral oracle of the whole space quadrature.
# Images of the Gaussian shift the center value by about 3e-4 at this size
# for alpha = 1/4. Smaller alpha decays too slowly for a 1e-3 comparison
BIG_BOX_PERIOD = 320.0
BIG_BOX_POINTS = 8192


def _sweep_grid(config: ExperimentConfig, dim: int) -> TorusGrid:
    return TorusGrid(dim, config.grid.period, SWEEP_POINTS[dim])


def _sweep_fields(config: ExperimentConfig,
                  grid: TorusGrid) -> List[TorusField]:
    return [TorusField.random_band_limited(grid, SWEEP_MAX_MODE,
                                           config.seed + i)
            for i in range(config.random_fields)]


def check_normalizing_constant(config: ExperimentConfig,
                               result: SuiteResult) -> Outcome:
    """Quadrature C_{d,a} against the closed form to 1e-8 relative"""

    checks = list()
    for dim, alpha in product(SWEEP_DIMS, SWEEP_ALPHAS):
        closed = closed_form_c_dalpha(dim, alpha)
        error = abs(constant_c_dalpha(dim, alpha) - closed) / closed
        checks.append(MarginReport(f"c_dalpha_d{dim}_a{alpha:g}", error, 0.0,
                                   tol=1e-8))
    return CheckGroup(checks)


def check_operator_equivalence(config: ExperimentConfig,
                               result: SuiteResult) -> Outcome:
    """Lattice sum against the spectral multiplier on random fields,
    1e-3 relative in the sup norm"""

    checks = list()
    for dim in SWEEP_DIMS:
        grid = _sweep_grid(config, dim)
        fields = _sweep_fields(config, grid)
        for alpha in SWEEP_ALPHAS:
            order = FracOrder(alpha, dim)
            worst = 0.0
            for field in fields:
                oracle = apply_spectral(field, order)
                lattice = apply_lattice_sum(field, order, config.shell_cutoff)
                worst = max(worst, (lattice - oracle).linf_norm()
                            / oracle.linf_norm())
            checks.append(MarginReport(f"lattice_sum_d{dim}_a{alpha:g}",
                                       worst, 0.0, tol=1e-3))
    return CheckGroup(checks)


def _big_box_at_center(order: FracOrder) -> float:
    grid = TorusGrid(1, BIG_BOX_PERIOD, BIG_BOX_POINTS)
    center = BIG_BOX_PERIOD / 2
    field = TorusField.from_function(grid,
                                     lambda x: np.exp(-(x - center) ** 2))
    return float(apply_spectral(field, order).values[BIG_BOX_POINTS // 2])


def check_pv_quadrature(config: ExperimentConfig,
                        result: SuiteResult) -> Outcome:
    """Whole space quadrature of a Gaussian at the origin against
    4^a Gamma(d/2 + a) / Gamma(d/2), and for d = 1, a = 1/4 against the
    spectral multiplier on a large periodic box"""

    checks = list()
    for dim, alpha in product(SWEEP_DIMS, (0.1, 0.25)):
        order = FracOrder(alpha, dim)
        value = apply_pv_quadrature(DecayingFunction.gaussian(dim),
                                    [0.0] * dim, order)
        closed = gaussian_fractional_laplacian_at_origin(dim, alpha)
        checks.append(MarginReport(f"pv_gaussian_d{dim}_a{alpha:g}",
                                   abs(value - closed), 0.0, tol=1e-6))
    order = FracOrder(0.25, 1)
    value = apply_pv_quadrature(DecayingFunction.gaussian(1), [0.0], order)
    checks.append(MarginReport("pv_big_box_d1_a0.25",
                               abs(value - _big_box_at_center(order)), 0.0,
                               tol=1e-3))
    return CheckGroup(checks)


def check_far_field_decay(config: ExperimentConfig,
                          result: SuiteResult) -> Outcome:
    """|x|^{-1-2a} decay exponent in one dimension, |value| <= 1e-3 ten
    units beyond the support in two"""

    checks = list()
    for alpha in (0.1, 0.25):
        _, slope = decay_profile(DecayingFunction.gaussian(1),
                                 FracOrder(alpha, 1), [20.0, 40.0, 80.0])
        checks.append(MarginReport(f"decay_exponent_d1_a{alpha:g}",
                                   abs(slope + 1 + 2 * alpha), 0.0,
                                   tol=0.05, detail={"slope": slope}))
    fn = DecayingFunction.gaussian(2)
    far = (fn.radius + 10) / np.sqrt(2)
    value = apply_pv_quadrature(fn, [far, far], FracOrder(0.25, 2))
    checks.append(MarginReport("far_field_d2", abs(value), 1e-3))
    return CheckGroup(checks)


def check_interpolation_sweep(config: ExperimentConfig,
                              result: SuiteResult) -> Outcome:
    """Sup norm interpolation bound on random_fields fields per (d, a)"""

    checks = list()
    for dim in SWEEP_DIMS:
        grid = _sweep_grid(config, dim)
        fields = _sweep_fields(config, grid)
        for alpha in SWEEP_ALPHAS:
            order = FracOrder(alpha, dim)
            reports = [check_interpolation_bound(field, order)
                       for field in fields]
            worst = min(reports, key=lambda report: report.margin)
            worst.name = f"interpolation_d{dim}_a{alpha:g}"
            checks.append(worst)
    return CheckGroup(checks)


def check_modulus_transfer_sampled(config: ExperimentConfig,
                                   result: SuiteResult) -> Outcome:
    """(-Lap)^a theta0 obeys the transfer of the fitted omega_B"""

    tm = time_modulus(config, result)
    return check_modulus_transfer(initial_data(config, result), tm.omega_b,
                                  config.params.order, config.pair_samples,
                                  config.seed)


def check_strict_modulus_fit(config: ExperimentConfig,
                             result: SuiteResult) -> Outcome:
    """theta0 has strict modulus omega(B |x - y|) over every grid pair,
    by at least the gap fit_B was asked for"""

    tm = time_modulus(config, result)
    margin = strict_margin(initial_data(config, result), tm.omega_b)
    logging.debug(f"Strict modulus margin {margin:.6g} at B={tm.B:.6g}")
    return MarginReport("strict_modulus", STRICT_GAP, margin,
                        detail={"B": tm.B})


def check_gradient_strict(config: ExperimentConfig,
                          result: SuiteResult) -> Outcome:
    tm = time_modulus(config, result)
    return check_gradient_strict_bound(initial_data(config, result),
                                       tm.omega_b)


def check_touching(config: ExperimentConfig,
                   result: SuiteResult) -> Outcome:
    """Touching point derivative identities for the profile of the
    unscaled base modulus. omega_B is a rescaling of it"""

    omega = time_modulus(config, result).base
    return check_touching_derivatives(touching_profile(omega), omega,
                                      dim=config.grid.dim)


def check_dissipation(config: ExperimentConfig,
                      result: SuiteResult) -> Outcome:
    return check_dissipation_inequality(time_modulus(config, result),
                                        config.params)


def check_tail(config: ExperimentConfig,
               result: SuiteResult) -> Outcome:
    tm = time_modulus(config, result)
    assert tm.constants is not None, "assembled modulus carries constants"
    return check_tail_bound(tm, config.params, tm.constants.delta0)


__all__ = ["check_normalizing_constant",
           "check_operator_equivalence",
           "check_pv_quadrature",
           "check_far_field_decay",
           "check_interpolation_sweep",
           "check_modulus_transfer_sampled",
           "check_strict_modulus_fit",
           "check_gradient_strict",
           "check_touching",
           "check_dissipation",
           "check_tail"]
