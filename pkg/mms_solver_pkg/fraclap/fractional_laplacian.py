"""(-Laplacian)^alpha on the torus and on R^d

Three representations:
    apply_spectral        Fourier multiplier |k|^{2 alpha}
    apply_lattice_sum     periodized singular integral over the cell
    apply_pv_quadrature   regularized whole space integral at a point
"""

from functools import lru_cache
import logging
from math import log, pi
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.integrate import quad
from scipy.special import roots_jacobi, zeta

from .decaying_function import DecayingFunction
from .frac_order import FracOrder
from .quadrature_error import QuadratureError
from ..fields import TorusField, TorusGrid


# Below this radius the second difference is replaced by its Taylor term
_TAYLOR_RADIUS = 1e-3


def apply_spectral(field: TorusField, order: FracOrder) -> TorusField:
    """Multiplies the Fourier coefficient at k by |k|^{2 alpha}"""

    _check_dims(field.grid, order)
    return field.map_spectral(np.power(field.grid.k_squared, order.alpha))


def _check_dims(grid: TorusGrid, order: FracOrder):
    if grid.dim != order.dim:
        raise ValueError(f"grid dim {grid.dim} != order dim {order.dim}")

#####################
# Lattice sum funcs #
#####################


def apply_lattice_sum(field: TorusField,
                      order: FracOrder,
                      shell_cutoff: int,
                      radial_nodes: int = 96,
                      angular_nodes: int = 48) -> TorusField:
    """C sum_k int_T (theta(x) - theta(x - z)) / |z + k L|^{d + 2 alpha} dz

    The integral over the fundamental cell T is written with the
    symmetric second difference 2 theta(x) - theta(x + z) - theta(x - z).
    Applied to the trigonometric interpolant it becomes a Fourier
    multiplier, computed once per grid and order by quadrature.
    Shells beyond shell_cutoff enter through their zeroth and second
    order moments. The fourth order remainder is the tail estimate."""

    _check_dims(field.grid, order)
    if shell_cutoff < 1:
        raise ValueError(f"shell_cutoff must be >= 1, got {shell_cutoff}")

    multiplier = lattice_sum_multiplier(field.grid, order.alpha,
                                        shell_cutoff, radial_nodes,
                                        angular_nodes)
    result = field.map_spectral(multiplier)
    tail = lattice_tail_estimate(field, order, shell_cutoff)
    if tail > 1e-6 * result.linf_norm():
        logging.warning(f"Lattice sum tail estimate {tail:.3g} exceeds 1e-6"
                        f" of the result norm {result.linf_norm():.3g};"
                        f" raise shell_cutoff above {shell_cutoff}")
    return result


def lattice_tail_estimate(field: TorusField,
                          order: FracOrder,
                          shell_cutoff: int) -> float:
    """Bound on the fourth order remainder of the truncated shells"""

    grid = field.grid
    s = grid.dim + 2 * order.alpha
    period = grid.period
    fourth = s * (s + 2) * (s + 4) * (s + 6) / 24
    moment = _cell_fourth_moment(grid)
    shells = _lattice_tail_sum(grid.dim, s + 4, shell_cutoff)
    return (order.c_dalpha * 2 * field.linf_norm() * fourth
            * period ** (-s - 4) * shells * moment)


def choose_shell_cutoff(field: TorusField,
                        order: FracOrder,
                        tol: float = 1e-6,
                        start: int = 4,
                        limit: int = 64) -> int:
    """Smallest shell count whose tail estimate is below tol * |theta|"""

    scale = max(field.linf_norm(), 1e-300)
    for cutoff in range(start, limit + 1):
        if lattice_tail_estimate(field, order, cutoff) <= tol * scale:
            return cutoff
    return limit


def _cell_fourth_moment(grid: TorusGrid) -> float:
    """int_T |z|^4 dz over the cell [-L/2, L/2)^d"""

    period = grid.period
    if grid.dim == 1:
        return period ** 5 / 80
    else:
        return period ** 6 / 40 + period ** 6 / 72


def _lattice_tail_sum(dim: int, sigma: float, cutoff: int) -> float:
    """sum over k in Z^d with |k|_inf > cutoff of |k|^{-sigma}"""

    if dim == 1:
        return float(2 * zeta(sigma, cutoff + 1))
    # Ring cutoff < |k|_inf <= outer summed directly, the rest by the
    # continuum integral outside the square of half side outer + 1/2
    outer = cutoff + 256
    axis = np.arange(-outer, outer + 1)
    k1, k2 = np.meshgrid(axis, axis, indexing="ij")
    ring = np.maximum(np.abs(k1), np.abs(k2)) > cutoff
    ring_sum = np.sum((k1[ring] ** 2 + k2[ring] ** 2) ** (-sigma / 2))
    angular, _ = quad(lambda phi: np.cos(phi) ** (sigma - 2), 0, pi / 4)
    half_side = outer + 0.5
    continuum = 8 * angular * half_side ** (2 - sigma) / (sigma - 2)
    return float(ring_sum + continuum)


def _ray_directions(dim: int,
                    period: float,
                    angular_nodes: int
                    ) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Unit directions over half the sphere, their weights and the ray
    length to the cell boundary"""

    if dim == 1:
        return np.array([[1.0]]), np.array([1.0]), np.array([period / 2])
    nodes, weights = leggauss(angular_nodes)
    angles: List[np.ndarray] = []
    ang_weights: List[np.ndarray] = []
    # Two quarter sectors: right face then top face of the square
    for start in (-pi / 4, pi / 4):
        angles.append(start + pi / 4 * (nodes + 1))
        ang_weights.append(pi / 4 * weights)
    phi = np.concatenate(angles)
    directions = np.stack([np.cos(phi), np.sin(phi)], axis=-1)
    lengths = (period / 2) / np.max(np.abs(directions), axis=-1)
    return directions, np.concatenate(ang_weights), lengths


def _smooth_kernel(points: np.ndarray,
                   dim: int,
                   s: float,
                   period: float,
                   cutoff: int) -> np.ndarray:
    """Shells 1..cutoff plus the analytic moments of farther shells"""

    axis = np.arange(-cutoff, cutoff + 1)
    mesh = np.meshgrid(*([axis] * dim), indexing="ij")
    shells = np.stack([m.ravel() for m in mesh], axis=-1)
    shells = shells[np.any(shells != 0, axis=-1)] * period

    kernel = np.zeros(len(points))
    # Chunked to bound memory of the points x shells distance table
    for start in range(0, len(points), 512):
        chunk = points[start:start + 512]
        diff = chunk[:, None, :] + shells[None, :, :]
        kernel[start:start + 512] = np.sum(
            np.sum(diff ** 2, axis=-1) ** (-s / 2), axis=1)

    zeroth = period ** (-s) * _lattice_tail_sum(dim, s, cutoff)
    second = (s * (s + 2 - dim) / (2 * dim) * period ** (-s - 2)
              * _lattice_tail_sum(dim, s + 2, cutoff))
    return kernel + zeroth + second * np.sum(points ** 2, axis=-1)


@lru_cache(maxsize=32)
def lattice_sum_multiplier(grid: TorusGrid,
                           alpha: float,
                           shell_cutoff: int,
                           radial_nodes: int = 96,
                           angular_nodes: int = 48) -> np.ndarray:
    """m(k) = 2 C sum over half cell nodes w (1 - cos(k . z))

    Nodes on each ray: Gauss-Jacobi with weight r^{1-2a} for the
    singular k = 0 kernel, Gauss-Legendre for the smooth shells"""

    dim = grid.dim
    s = dim + 2 * alpha
    order = FracOrder(alpha, dim)
    directions, dir_weights, lengths = _ray_directions(dim, grid.period,
                                                       angular_nodes)
    jac_t, jac_w = roots_jacobi(radial_nodes, 0.0, 1 - 2 * alpha)
    leg_t, leg_w = leggauss(radial_nodes)

    points: List[np.ndarray] = []
    weights: List[np.ndarray] = []
    smooth_points: List[np.ndarray] = []
    smooth_weights: List[np.ndarray] = []
    for direction, dir_weight, length in zip(directions, dir_weights,
                                             lengths):
        half = length / 2
        # int_0^R r^{1-2a} E(r) dr with E = (1 - cos) / r^2
        radii = half * (1 + jac_t)
        points.append(radii[:, None] * direction[None, :])
        weights.append(dir_weight * half ** (2 - 2 * alpha) * jac_w
                       / radii ** 2)
        # int_0^R r^{d-1} (1 - cos) K(r sigma) dr
        radii = half * (1 + leg_t)
        smooth_points.append(radii[:, None] * direction[None, :])
        smooth_weights.append(dir_weight * half * leg_w
                              * radii ** (dim - 1))

    smooth = np.concatenate(smooth_points)
    kernel = _smooth_kernel(smooth, dim, s, grid.period, shell_cutoff)
    nodes = np.concatenate(points + [smooth])
    node_weights = np.concatenate(
        weights + [np.concatenate(smooth_weights) * kernel])

    wavevectors = np.stack([k.ravel() for k in grid.wavevectors], axis=-1)
    multiplier = np.zeros(len(wavevectors))
    for start in range(0, len(nodes), 1024):
        phase = wavevectors @ nodes[start:start + 1024].T
        multiplier += (1 - np.cos(phase)) @ node_weights[start:start + 1024]
    multiplier = 2 * order.c_dalpha * multiplier.reshape(grid.shape)
    # Shared through the cache
    multiplier.flags.writeable = False
    return multiplier

###############
# Whole space #
###############


def apply_pv_quadrature(fn: DecayingFunction,
                        x: Sequence[float],
                        order: FracOrder,
                        angular_nodes: int = 256) -> float:
    """(-Laplacian)^alpha fn(x) on R^d by radial-angular quadrature

    The integrand theta(x) - theta(x - y) - y . grad theta(x) chi(|y|<=1)
    is symmetrized to half the second difference, so the gradient term
    cancels. Inside r < 1e-3 the Taylor term -r^2 sigma^T H sigma is used.
    Beyond R = |x| + R_supp only theta(x) survives and that tail is
    added in closed form, which leaves an error below 1e-14."""

    point = np.atleast_1d(np.asarray(x, dtype=float))
    if len(point) != order.dim or fn.dim != order.dim:
        raise ValueError("point, function and order dims must agree")
    if fn.sup_norm == 0:
        return 0.0

    alpha = order.alpha
    center = fn.value(point)
    hessian = fn.hessian(point)
    far = max(float(np.linalg.norm(point)) + fn.radius, 1.0)
    breaks = sorted({1.0, min(float(np.linalg.norm(point)), far)})
    breaks = [b for b in breaks if _TAYLOR_RADIUS < b < far]

    def along(direction: np.ndarray) -> Tuple[float, float]:
        """int_0^inf (2 theta(x) - theta(x+r s) - theta(x-r s)) r^{-1-2a}"""

        curvature = float(direction @ hessian @ direction)
        taylor = (-curvature * _TAYLOR_RADIUS ** (2 - 2 * alpha)
                  / (2 - 2 * alpha))

        def integrand(r: float) -> float:
            return ((2 * center - fn.value(point + r * direction)
                     - fn.value(point - r * direction))
                    * r ** (-1 - 2 * alpha))

        body, error = quad(integrand, _TAYLOR_RADIUS, far, points=breaks,
                           limit=400, epsabs=1e-12, epsrel=1e-10)
        tail = 2 * center * far ** (-2 * alpha) / (2 * alpha)
        return taylor + body + tail, error

    if order.dim == 1:
        value, error = along(np.array([1.0]))
        total, total_error = value, error
    else:
        total, total_error = _half_circle(along, angular_nodes)
        coarse, _ = _half_circle(along, angular_nodes // 2)
        total_error += abs(total - coarse)

    result = order.c_dalpha * total
    if order.c_dalpha * total_error > 1e-6:
        raise QuadratureError(f"PV quadrature at x={point.tolist()} did not"
                              f" converge: error {total_error:.3g}")
    return float(result)


def _half_circle(along: Callable[[np.ndarray], Tuple[float, float]],
                 nodes: int) -> Tuple[float, float]:
    """int over phi in [0, pi) of the radial integral, Gauss-Legendre"""

    t, w = leggauss(nodes)
    total, error = 0.0, 0.0
    for phi, weight in zip(pi / 2 * (t + 1), pi / 2 * w):
        value, err = along(np.array([np.cos(phi), np.sin(phi)]))
        total += weight * value
        error += weight * err
    return total, error


def decay_profile(fn: DecayingFunction,
                  order: FracOrder,
                  radii: Sequence[float],
                  direction: Optional[Sequence[float]] = None
                  ) -> Tuple[np.ndarray, float]:
    """(-Laplacian)^alpha fn along a ray and the fitted decay exponent

    For compactly concentrated fn the far field is
    -C (int fn) |x|^{-d-2 alpha}, so the fitted slope of log|value|
    against log|x| approaches -(d + 2 alpha)"""

    if direction is None:
        direction = [1.0] + [0.0] * (order.dim - 1)
    unit = np.asarray(direction, dtype=float)
    unit = unit / np.linalg.norm(unit)
    values = np.array([apply_pv_quadrature(fn, r * unit, order)
                       for r in radii])
    logs = np.log(np.abs(values))
    slope = np.polyfit([log(r) for r in radii], logs, 1)[0]
    return values, float(slope)


__all__ = ["apply_spectral",
           "apply_lattice_sum",
           "apply_pv_quadrature",
           "lattice_sum_multiplier",
           "lattice_tail_estimate",
           "choose_shell_cutoff",
           "decay_profile"]
