"""Detection and characterization of the pi jumps of Arg<U(t)>.

The mean angle is discontinuous at t* = (2k+1)*pi, where the angular
probability density momentarily has two identical maxima.  Jumps are
characterized by two-sided limits of Arg<U(t)> around each t*, never by
unwrapping heuristics.
"""

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .states import TWO_PI, expectation_l, expectation_u
from .theta import DEFAULT_TOL

__all__ = ["JumpPoint", "JumpCloud", "jump_points", "scan_discontinuities"]


@dataclass(frozen=True)
class JumpPoint:
    """One phase discontinuity: index k, jump time t* = (2k+1)*pi, the angle
    limits from both sides, the meridian position, and the signed jump."""

    k: int
    t_star: float
    phi_minus: float
    phi_plus: float
    l: float
    delta_phi: float


@dataclass(frozen=True)
class JumpCloud:
    """Jump points plus cluster statistics over the union of both angle limits.

    The two-sided limits of every pi jump are antipodal, so the circular
    resultant of the union vanishes identically and a circular mean would be
    numerical noise.  The cluster center is therefore the arithmetic mean of
    the principal-branch angles (Arg in (-pi, pi], reduced to [0, 2pi) for
    reporting): for a cloud on the generators alpha and alpha + pi that mean
    sits exactly between them, on the generator alpha - pi/2 where the jump
    points concentrate.
    """

    points: tuple
    mean_phi: float
    spread_phi: float
    integer_j: bool


def circular_difference(phi_to, phi_from):
    """Signed angle difference wrapped into (-pi, pi], with exact pi kept as +pi."""
    d = (phi_to - phi_from) % TWO_PI
    if d > math.pi:
        d -= TWO_PI
    return d


def _arg_u(params, t, tol):
    return cmath.phase(expectation_u(params, t, tol)) % TWO_PI


def jump_points(params, cfg, k_min, k_max, eps=1e-6, tol=DEFAULT_TOL):
    """Jump records for k in [k_min, k_max] and their circular cluster statistics.

    For non-integer J the points are still computed, but the pi magnitude of
    the jump is not guaranteed; a warning is emitted.
    """
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    integer_j = abs(params.J - round(params.J)) < 1e-12
    if not integer_j:
        warnings.warn(
            f"J={params.J} is not an integer: phase jumps need not have magnitude pi",
            stacklevel=2,
        )
    points = []
    for k in range(k_min, k_max + 1):
        t_star = (2 * k + 1) * math.pi
        phi_minus = _arg_u(params, t_star - eps, tol)
        phi_plus = _arg_u(params, t_star + eps, tol)
        points.append(
            JumpPoint(
                k=k,
                t_star=t_star,
                phi_minus=phi_minus,
                phi_plus=phi_plus,
                l=expectation_l(params, cfg, t_star),
                delta_phi=circular_difference(phi_plus, phi_minus),
            )
        )
    angles = np.array([p.phi_minus for p in points] + [p.phi_plus for p in points])
    principal = np.angle(np.exp(1j * angles))  # fold into (-pi, pi]
    return JumpCloud(
        points=tuple(points),
        mean_phi=float(np.mean(principal)) % TWO_PI,
        spread_phi=float(np.std(principal)),
        integer_j=integer_j,
    )


def scan_discontinuities(params, cfg, t_min, t_max, dt, threshold, tol=DEFAULT_TOL):
    """Sweep Arg<U(t)> on a uniform grid and flag circular steps above threshold.

    Returns (t, delta_phi) pairs where t is the left sample of the flagged
    step.  Smooth drift between samples is O(dt), so any threshold well above
    that isolates genuine discontinuities.
    """
    ts = np.arange(t_min, t_max + 0.5 * dt, dt)
    args = [_arg_u(params, float(t), tol) for t in ts]
    flagged = []
    for i in range(len(ts) - 1):
        d = circular_difference(args[i + 1], args[i])
        if abs(d) > threshold:
            flagged.append((float(ts[i]), d))
    return flagged
