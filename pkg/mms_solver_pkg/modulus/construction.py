"""The time dependent modulus behind the gradient bound B e^{C0 t}

omega_base -> fit_B -> construct_constants -> TimeModulus
"""

from itertools import product
import logging
from math import inf, log10
from typing import Optional, Tuple

import numpy as np
from scipy.optimize import brentq

from .modulus import Modulus, omega_base
from .modulus_construction_error import ModulusConstructionError
from .theory_constants import TheoryConstants
from .time_modulus import TimeModulus
from ..fields import TorusField
from ..fraclap.frac_order import transfer_constant
from ..picard.pde_params import PdeParams
from ..picard.picard_constants import compute_constants

# Relative gap omega_B must keep over every grid pair at t = 0
STRICT_GAP = 1e-6
MAX_DOUBLINGS = 10
# delta0 search: log grid from XI_FLOOR to the cap, then bisection
XI_FLOOR = 1e-12
LOG_GRID_POINTS = 1000
BISECTIONS = 100


def strict_margin(theta: TorusField, omega_b: Modulus) -> float:
    """min over all pairs of grid points of
    (omega_B(xi) - |theta(x) - theta(y)|) / omega_B(xi)"""

    grid = theta.grid
    n = grid.points_per_axis
    axes = tuple(range(grid.dim))
    values = theta.values
    worst = inf
    # Minimum image offsets cover every unordered pair twice
    for offset in product(range(-(n // 2) + 1, n // 2 + 1), repeat=grid.dim):
        if not any(offset):
            continue
        xi = float(grid.torus_distance(np.array(offset)))
        jump = float(np.max(np.abs(values - np.roll(values, offset,
                                                    axis=axes))))
        bound = float(omega_b(xi))
        worst = min(worst, (bound - jump) / bound)
    return worst


def fit_B(theta0: TorusField,
          omega: Modulus,
          max_doublings: int = MAX_DOUBLINGS) -> float:
    """Smallest B >= 1 (up to a 1e-6 relative nudge) with

        omega(B) > max(2 |theta0|_inf + 1, |grad theta0|_inf + 1)

    then doubled while some grid pair breaks the strict modulus"""

    if not omega.unbounded:
        raise ValueError(f"fit_B needs an unbounded modulus, got {omega}")
    target = max(2 * theta0.linf_norm() + 1,
                 theta0.lipschitz_estimate() + 1)

    def excess(b: float) -> float:
        return float(omega(b)) - target

    if excess(1.0) > 0:
        B = 1.0
    else:
        upper = 2.0
        while excess(upper) <= 0:
            upper *= 2
            if upper > 1e300:
                raise ModulusConstructionError(f"{omega} never exceeds"
                                               f" {target:.6g}")
        B = brentq(excess, upper / 2, upper, xtol=1e-14,
                   rtol=1e-14) * (1 + 1e-6)

    for doubling in range(max_doublings + 1):
        margin = strict_margin(theta0, omega.rescaled(B))
        if margin >= STRICT_GAP:
            logging.info(f"B = {B:.6g} with relative margin {margin:.3g}")
            return float(B)
        if doubling < max_doublings:
            logging.warning(f"B = {B:.6g} leaves relative margin"
                            f" {margin:.3g} on the grid, doubling")
            B *= 2
    raise ModulusConstructionError(f"no strict B after {max_doublings}"
                                   f" doublings, last B = {B:.6g}")


def delta0_cap(B: float, params: PdeParams) -> float:
    """min(1/B, (nu (1-2a) / (mu C |S^{d-1}|))^{1/(1-a)})"""

    cap = 1 / B
    if params.mu > 0:
        order = params.order
        alpha = params.alpha
        ratio = (params.nu * (1 - 2 * alpha)
                 / (params.mu * order.c_dalpha * order.sphere_area))
        cap = min(cap, ratio ** (1 / (1 - alpha)))
    return cap


def dissipation_sign(xi: np.ndarray,
                     omega_b: Modulus,
                     B: float,
                     params: PdeParams) -> np.ndarray:
    """4 nu omega_B''(xi) + K B xi^{1-2a} / (1-2a), K = mu C |S| / a"""

    alpha = params.alpha
    K = params.mu * transfer_constant(params.order)
    return (4 * params.nu * omega_b.second(xi)
            + K * B * np.asarray(xi) ** (1 - 2 * alpha) / (1 - 2 * alpha))


def construct_constants(B: float,
                        params: PdeParams,
                        omega: Optional[Modulus] = None
                        ) -> Tuple[float, float]:
    """delta0 and C0 for omega_B

    delta0 is the largest xi below the cap with the dissipation sign
    negative on the whole log grid below it, refined by bisection"""

    if not B >= 1:
        raise ValueError(f"B must be >= 1, got {B}")
    if omega is None:
        omega = omega_base(params.alpha)
    omega_b = omega.rescaled(B)
    alpha = params.alpha

    cap = delta0_cap(B, params)
    if not cap > XI_FLOOR:
        raise ModulusConstructionError(f"delta0 cap {cap:.3g} is below"
                                       f" {XI_FLOOR:g}")
    xis = np.logspace(log10(XI_FLOOR), log10(cap), LOG_GRID_POINTS)
    failing = np.flatnonzero(dissipation_sign(xis, omega_b, B, params) >= 0)
    if len(failing) == 0:
        delta0 = float(cap)
    elif failing[0] == 0:
        raise ModulusConstructionError(f"dissipation sign condition fails"
                                       f" at xi = {XI_FLOOR:g}, {params}")
    else:
        low, high = float(xis[failing[0] - 1]), float(xis[failing[0]])
        for _ in range(BISECTIONS):
            middle = (low + high) / 2
            if dissipation_sign(middle, omega_b, B, params) < 0:
                low = middle
            else:
                high = middle
        delta0 = low
    if not delta0 > XI_FLOOR:
        raise ModulusConstructionError(f"delta0 = {delta0:.3g} is not above"
                                       f" {XI_FLOOR:g}")

    K = params.mu * transfer_constant(params.order)
    C0 = (K / float(omega_b(delta0))
          * (B ** (2 * alpha - 1) / delta0
             + B ** alpha / delta0 ** alpha
             + B * delta0 ** (1 - 2 * alpha) / (1 - 2 * alpha)))
    return delta0, float(C0)


def assemble_time_modulus(theta0: TorusField,
                          params: PdeParams) -> TimeModulus:
    if theta0.grid.dim != params.dim:
        raise ValueError(f"data dim {theta0.grid.dim} != params dim"
                         f" {params.dim}")
    omega = omega_base(params.alpha)
    B = fit_B(theta0, omega)
    delta0, C0 = construct_constants(B, params, omega)
    constants = TheoryConstants(params.order.c_dalpha, B, delta0, C0,
                                compute_constants(theta0, params))
    logging.info(f"Assembled {constants} for {params}")
    return TimeModulus(omega, B, C0, constants)


__all__ = ["STRICT_GAP",
           "MAX_DOUBLINGS",
           "strict_margin",
           "fit_B",
           "delta0_cap",
           "dissipation_sign",
           "construct_constants",
           "assemble_time_modulus"]
