"""Numerical checks of the fractional Laplacian estimates

check_interpolation_bound  sup norm interpolation bound
modulus_transfer           the modulus obeyed by (-Laplacian)^alpha theta
check_modulus_transfer     sampled verification of that modulus
"""

from bisect import bisect_left, insort
import logging
from typing import Dict, List

import numpy as np
from scipy.integrate import quad

from .frac_order import FracOrder, interpolation_constant
from .frac_order import transfer_constant
from .fractional_laplacian import apply_spectral
from .margin_report import MarginReport
from .quadrature_error import QuadratureError
from ..fields import PairBatch, TorusField, sample_pairs
from ..modulus.modulus import Modulus


def check_interpolation_bound(field: TorusField,
                              order: FracOrder) -> MarginReport:
    """|(-Lap)^a theta|_inf <= K |theta|_inf^{1-2a} |grad theta|_inf^{2a}

    K = C |S^{d-1}| / (a (1 - 2a))"""

    alpha = order.alpha
    lhs = apply_spectral(field, order).linf_norm()
    rhs = (interpolation_constant(order)
           * field.linf_norm() ** (1 - 2 * alpha)
           * field.lipschitz_estimate() ** (2 * alpha))
    # Roundoff on a vanishing left side
    tol = 1e-12 * max(rhs, field.linf_norm(), 1.0)
    return MarginReport("interpolation_bound", lhs, rhs, tol=tol,
                        detail={"alpha": alpha, "dim": order.dim})


class _TransferIntegral:
    """Cumulative K int_0^xi omega'(eta) eta^{-2a} d eta with a cache

    Integrals are chained between sorted cached nodes so each call only
    integrates the new stretches"""

    def __init__(self, omega: Modulus, alpha: float, factor: float):
        self.omega: Modulus = omega
        self.alpha: float = alpha
        self.factor: float = factor
        self.nodes: List[float] = [0.0]
        self.cache: Dict[float, float] = {0.0: 0.0}

    def _segment(self, start: float, stop: float) -> float:
        alpha = self.alpha
        if start == 0:
            # (eta - 0)^{-2a} handled by the algebraic weight
            value, error = quad(lambda eta: float(self.omega.first(eta)),
                                0.0, stop, weight="alg", wvar=(-2 * alpha, 0),
                                limit=200, epsabs=1e-14, epsrel=1e-12)
        else:
            value, error = quad(lambda eta: float(self.omega.first(eta)
                                                  * eta ** (-2 * alpha)),
                                start, stop, limit=200, epsabs=1e-14,
                                epsrel=1e-12)
        if error > 1e-8 * abs(value) + 1e-12:
            raise QuadratureError(f"transfer integral on [{start}, {stop}]"
                                  f" did not converge: error {error:.3g}")
        return value

    def __call__(self, xi: np.ndarray) -> np.ndarray:
        xi = np.asarray(xi, dtype=float)
        if np.any(xi < 0):
            raise ValueError("modulus arguments must be nonnegative")
        for point in np.unique(xi):
            point = float(point)
            if point in self.cache:
                continue
            # Integrate from the nearest cached node below
            index = bisect_left(self.nodes, point)
            below = self.nodes[index - 1]
            self.cache[point] = (self.cache[below]
                                 + self._segment(below, point))
            insort(self.nodes, point)
        lookup = np.vectorize(lambda p: self.cache[float(p)], otypes=[float])
        return self.factor * lookup(xi)


def modulus_transfer(omega: Modulus, order: FracOrder) -> Modulus:
    """omega~(xi) = C |S^{d-1}| / a * int_0^xi omega'(eta) / eta^{2a}

    (-Laplacian)^a theta has modulus omega~ whenever theta has modulus
    omega. The integral diverges for a >= 1/2"""

    alpha = order.alpha
    if alpha >= 0.5:
        raise ValueError(f"transfer needs alpha < 1/2, got {alpha}")

    factor = transfer_constant(order)
    integral = _TransferIntegral(omega, alpha, factor)

    def first(xi: np.ndarray) -> np.ndarray:
        with np.errstate(divide="ignore", invalid="ignore"):
            return factor * omega.first(xi) * xi ** (-2 * alpha)

    def second(xi: np.ndarray) -> np.ndarray:
        with np.errstate(divide="ignore", invalid="ignore"):
            return factor * (omega.second(xi) * xi ** (-2 * alpha)
                             - 2 * alpha * omega.first(xi)
                             * xi ** (-2 * alpha - 1))

    at_zero = np.inf if omega.derivative_at_zero > 0 else 0.0
    logging.debug(f"Transfer modulus of {omega.name} at alpha={alpha}")
    return Modulus(integral, first, second, derivative_at_zero=at_zero,
                   unbounded=omega.unbounded, strong=False,
                   name=f"transfer({omega.name})")


def check_modulus_transfer(field: TorusField,
                           omega: Modulus,
                           order: FracOrder,
                           samples: int,
                           seed: int = 0) -> MarginReport:
    """|(-Lap)^a theta(x) - (-Lap)^a theta(z)| <= omega~(|x - z|) + tol

    tol = 1e-6 + 1e-3 omega~. The report carries the worst pair"""

    batch = PairBatch(field.grid, sample_pairs(field.grid, samples, seed))
    transferred = modulus_transfer(omega, order)
    image = apply_spectral(field, order).values.ravel()
    jumps = np.abs(image[batch.flat_x] - image[batch.flat_y])
    bounds = transferred(batch.separations)
    tols = 1e-6 + 1e-3 * bounds
    slack = bounds + tols - jumps
    worst = int(np.argmin(slack))
    return MarginReport("modulus_transfer",
                        float(jumps[worst]),
                        float(bounds[worst]),
                        tol=float(tols[worst]),
                        detail={"pair": batch.pairs[worst],
                                "samples": len(batch),
                                "violations": int(np.sum(slack < 0))})


__all__ = ["check_interpolation_bound",
           "modulus_transfer",
           "check_modulus_transfer"]
