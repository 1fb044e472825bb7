"""Numerical checks of the modulus construction

check_dissipation_inequality  sign of the breakthrough right hand side
check_tail_bound              closed bound on the transfer integral tail
check_touching_derivatives    derivative relations at touching pairs
check_gradient_strict_bound   |grad theta|_inf < omega'(0)
"""

from math import log10
from typing import Callable, List, Optional, Sequence

import numpy as np
from scipy.integrate import quad

from .modulus import Modulus
from .time_modulus import TimeModulus
from ..fields import TorusField
from ..fraclap.lemma_check_funcs import modulus_transfer
from ..fraclap.margin_report import CheckGroup, MarginReport
from ..fraclap.quadrature_error import QuadratureError
from ..picard.pde_params import PdeParams


Profile = Callable[[np.ndarray], np.ndarray]

# Fourth order central stencils on offsets -2h .. 2h
FIRST_STENCIL = np.array([1, -8, 0, 8, -1]) / 12
SECOND_STENCIL = np.array([-1, 16, -30, 16, -1]) / 12


def check_dissipation_inequality(tm: TimeModulus,
                                 params: PdeParams,
                                 times: Optional[np.ndarray] = None,
                                 xis: Optional[np.ndarray] = None
                                 ) -> MarginReport:
    """4 nu d_xi^2 Omega - d_t Omega + mu Omega~ < 0 on a (t, xi) grid

    Omega~ is the transfer modulus of Omega(t, .), i.e. f(t) times that
    of omega_B"""

    times = np.linspace(0, 5, 11) if times is None else np.asarray(times)
    xis = np.logspace(-6, 3, 400) if xis is None else np.asarray(xis)
    t, xi = np.meshgrid(times, xis, indexing="ij")
    with np.errstate(over="ignore", invalid="ignore"):
        rhs = 4 * params.nu * tm.second(t, xi) - tm.time_derivative(t, xi)
        if params.mu != 0:
            transferred = modulus_transfer(tm.omega_b, params.order)(xis)
            rhs = rhs + params.mu * tm.growth(t) * transferred[None, :]
    worst = np.unravel_index(int(np.argmax(rhs)), rhs.shape)
    return MarginReport("dissipation_inequality", float(rhs[worst]), 0.0,
                        strict=True,
                        detail={"t": float(t[worst]), "xi": float(xi[worst]),
                                "points": rhs.size})


def check_tail_bound(tm: TimeModulus,
                     params: PdeParams,
                     delta0: float,
                     xis: Optional[Sequence[float]] = None) -> MarginReport:
    """int_delta0^xi omega_B'(eta) eta^{-2a} <= B^{2a-1}/delta0
    + B^a/delta0^a for every tested xi > delta0"""

    alpha, B = params.alpha, tm.B
    if xis is None:
        xis = np.logspace(log10(delta0), 3, 61)[1:]
    nodes = [float(xi) for xi in sorted(xis) if xi > delta0]
    if not nodes:
        raise ValueError(f"no tested xi above delta0 = {delta0:.3g}")

    def integrand(eta: float) -> float:
        return float(tm.omega_b.first(eta)) * eta ** (-2 * alpha)

    total, start = 0.0, delta0
    cumulative: List[float] = []
    for node in nodes:
        value, error = quad(integrand, start, node, limit=200,
                            epsabs=1e-14, epsrel=1e-12)
        if error > 1e-8 * abs(value) + 1e-12:
            raise QuadratureError(f"tail integral on [{start}, {node}]"
                                  f" did not converge")
        total += value
        cumulative.append(total)
        start = node
    bound = B ** (2 * alpha - 1) / delta0 + B ** alpha / delta0 ** alpha
    worst = int(np.argmax(cumulative))
    return MarginReport("tail_bound", cumulative[worst], bound,
                        detail={"xi": nodes[worst], "delta0": delta0})


def touching_profile(omega: Modulus) -> Profile:
    """g(s) = sign(s) omega(2|s|) / 2, so that omega(eta) = 2 g(eta / 2)"""

    def profile(s: np.ndarray) -> np.ndarray:
        s = np.asarray(s, dtype=float)
        return np.sign(s) * omega(2 * np.abs(s)) / 2
    return profile


def _derivatives(theta: Callable[[np.ndarray], np.ndarray],
                 point: np.ndarray,
                 h: float):
    """Gradient and Laplacian of theta at point by fourth order
    differences along each axis"""

    offsets = h * np.arange(-2, 3)
    gradient, laplacian = [], 0.0
    for axis in range(len(point)):
        stencil = np.tile(point, (5, 1))
        stencil[:, axis] += offsets
        samples = theta(stencil)
        gradient.append(float(FIRST_STENCIL @ samples) / h)
        laplacian += float(SECOND_STENCIL @ samples) / h ** 2
    return np.array(gradient), laplacian


def check_touching_derivatives(profile: Profile,
                               omega: Modulus,
                               xis: Sequence[float] = (0.25, 0.5, 1.0, 2.0),
                               dim: int = 1,
                               step: float = 1e-3) -> CheckGroup:
    """At x0 = (xi/2, 0..) and y0 = (-xi/2, 0..) for theta(x) = g(x_1)
    with omega(eta) = 2 g(eta / 2):

        d_1 theta(x0) = d_1 theta(y0) = omega'(xi), d_j theta = 0, j > 1
        Lap theta(x0) - Lap theta(y0) = 4 omega''(xi)

    Raises ValueError if g is not odd"""

    def theta(points: np.ndarray) -> np.ndarray:
        return profile(points[..., 0])

    checks: List[MarginReport] = []
    for xi in xis:
        half = xi / 2
        stencil = half + step * np.arange(-2, 3)
        samples = profile(stencil)
        mirrored = profile(-stencil)
        if np.max(np.abs(samples + mirrored)) > 1e-12 * max(
                1.0, float(np.max(np.abs(samples)))):
            raise ValueError(f"profile is not odd near s = {half:g}")

        x0 = np.zeros(dim)
        x0[0] = half
        grad_x, lap_x = _derivatives(theta, x0, step)
        grad_y, lap_y = _derivatives(theta, -x0, step)
        slope = float(omega.first(xi))
        curvature = 4 * float(omega.second(xi))
        gradient_error = max(abs(grad_x[0] - slope), abs(grad_y[0] - slope),
                             float(np.max(np.abs(grad_x[1:]), initial=0)),
                             float(np.max(np.abs(grad_y[1:]), initial=0)))
        gap = lap_x - lap_y
        checks.append(MarginReport(f"touching_gradient_{xi:g}",
                                   gradient_error, 1e-8,
                                   detail={"slope": slope}))
        checks.append(MarginReport(f"touching_laplacian_{xi:g}",
                                   abs(gap - curvature)
                                   / max(1.0, abs(curvature)),
                                   1e-6,
                                   detail={"gap": gap,
                                           "four_omega_second": curvature}))
    return CheckGroup(checks)


def check_gradient_strict_bound(theta: TorusField,
                                omega: Modulus) -> MarginReport:
    return MarginReport("gradient_strict_bound",
                        theta.lipschitz_estimate(),
                        omega.derivative_at_zero,
                        strict=True)


__all__ = ["check_dissipation_inequality",
           "check_tail_bound",
           "touching_profile",
           "check_touching_derivatives",
           "check_gradient_strict_bound"]
