"""Checks run on a finished RunReport"""

from math import exp, log
from typing import List, Optional, TYPE_CHECKING

import numpy as np

from .run_report import RunReport
from ..fraclap.frac_order import interpolation_constant
from ..fraclap.margin_report import CheckGroup, MarginReport

if TYPE_CHECKING:
    from ..picard.pde_params import PdeParams


def _log_slope(xs: np.ndarray, ys: np.ndarray) -> float:
    return float(np.polyfit(np.log(xs), np.log(ys), 1)[0])


def check_parabolic_smoothing(report: RunReport,
                              beta: float,
                              t_min: float,
                              t_max: float = 1.0,
                              fit_max: Optional[float] = None,
                              rough: bool = False) -> CheckGroup:
    """Holder seminorm of grad theta against
    A (t^{-(1+b)/2} + t^{(1-b)/2}) on [t_min, t_max]

    A is the smallest constant for which the curve envelopes the data.
    With rough data the log-log slope over [t_min, fit_max] must match
    -(1+b)/2 within a factor 3"""

    if not 0 < beta < 1:
        raise ValueError(f"beta must lie in (0, 1), got {beta}")
    times = report.array("times")
    holder = report.array("holder")
    window = (times >= t_min) & (times <= t_max) & (times > 0)
    if np.any(np.isnan(holder[window])):
        raise ValueError("report carries no Holder seminorms, run with"
                         f" holder_beta={beta}")
    if np.sum(window) < 2:
        raise ValueError(f"need two records in [{t_min}, {t_max}]")

    t, values = times[window], holder[window]
    envelope = t ** (-(1 + beta) / 2) + t ** ((1 - beta) / 2)
    A = float(np.max(values / envelope))
    excess = (float(np.max(values - A * envelope)) if np.isfinite(A)
              else np.inf)
    checks: List[MarginReport] = [
        MarginReport("smoothing_envelope", excess, 0.0,
                     tol=1e-12 * max(A, 1.0), detail={"A": A})]
    expected = -(1 + beta) / 2
    slope = float("nan")
    if rough:
        fit = t <= (t_max if fit_max is None else fit_max)
        slope = _log_slope(t[fit], values[fit])
        # slope / expected must lie in [1/3, 3]
        ratio = slope / expected
        checks.append(MarginReport("smoothing_exponent",
                                   abs(log(ratio)) if ratio > 0 else np.inf,
                                   log(3.0),
                                   detail={"slope": slope,
                                           "expected": expected}))
    return CheckGroup(checks, {"A": A, "slope": slope,
                               "expected": expected})


def regularity_bound(report: RunReport, params: "PdeParams") -> np.ndarray:
    """Y(t) = (Y0 + b/a) e^{at} - b/a solving Y' = aY + b, Y(0) = Y0

    a = mu K A^{2a}(1-2a), b = |lambda| A^p + 2 a mu K A^{2a} with A
    the largest recorded Lipschitz estimate"""

    alpha = params.alpha
    K = interpolation_constant(params.order)
    A = max(report.lip)
    a = params.mu * K * A ** (2 * alpha) * (1 - 2 * alpha)
    b = (abs(params.lam) * A ** params.p
         + 2 * alpha * params.mu * K * A ** (2 * alpha))
    Y0 = report.linf[0]
    times = report.array("times")
    if a == 0:
        return Y0 + b * times
    with np.errstate(over="ignore"):
        return (Y0 + b / a) * np.exp(a * times) - b / a


def regularity_monitor(report: RunReport,
                       params: "PdeParams") -> MarginReport:
    """|theta(t)|_inf stays below the explicit solution of the sup norm
    inequality at every record"""

    if len(report) == 0:
        raise ValueError("report has no records")
    bound = regularity_bound(report, params)
    linf = report.array("linf")
    excess = float(np.max(linf - bound))
    tol = 1e-12 + 1e-9 * float(np.max(np.abs(linf)))
    return MarginReport("regularity_sup_norm", excess, 0.0, tol=tol,
                        detail={"A": max(report.lip),
                                "final_bound": float(bound[-1]),
                                "final_linf": float(linf[-1])})


def growth_exponent(report: RunReport) -> float:
    """Least squares slope of log lip(t) against t, NaN if undefined"""

    times = report.array("times")
    lip = report.array("lip")
    keep = np.isfinite(lip) & (lip > 0)
    if np.sum(keep) < 2:
        return float("nan")
    return float(np.polyfit(times[keep], np.log(lip[keep]), 1)[0])


def linear_mode_growth(params: "PdeParams", k_squared: float) -> float:
    """mu |k|^{2a} - nu |k|^2, the exact growth rate of one mode when
    lambda = 0"""

    return params.mu * k_squared ** params.alpha - params.nu * k_squared


def linear_lipschitz(params: "PdeParams",
                     lip0: float,
                     t: float,
                     k_squared: float = 1.0) -> float:
    return lip0 * exp(t * linear_mode_growth(params, k_squared))


__all__ = ["check_parabolic_smoothing",
           "regularity_bound",
           "regularity_monitor",
           "growth_exponent",
           "linear_mode_growth",
           "linear_lipschitz"]
