"""Closed-form classical dynamics on the cylinder.

Uniform rotation on the parallel (angular velocity J) superposed with
harmonic oscillation along the meridian (frequency omega).  Everything is
evaluated in closed form; there is no integrator to accumulate error.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .states import TWO_PI, OscillatorConfig, _require_finite

__all__ = ["ClassicalInitial", "ClassicalSample", "classical_solution", "is_periodic"]


@dataclass(frozen=True)
class ClassicalInitial:
    """Initial conditions: angle, conserved angular momentum, meridian position and momentum."""

    phi0: float
    J: float
    l0: float
    p_l0: float

    def __post_init__(self):
        for name in ("phi0", "J", "l0", "p_l0"):
            _require_finite(name, getattr(self, name))
        object.__setattr__(self, "phi0", self.phi0 % TWO_PI)


@dataclass(frozen=True)
class ClassicalSample:
    t: float
    phi: float
    l: float
    p_l: float
    energy: float


def classical_solution(init, cfg, t):
    """Exact solution at time t: phi advances uniformly, (l, p_l) rotate at omega."""
    w = cfg.omega
    phi = (init.phi0 + init.J * t) % TWO_PI
    l = init.l0 * math.cos(w * t) + (init.p_l0 / w) * math.sin(w * t)
    p_l = init.p_l0 * math.cos(w * t) - w * init.l0 * math.sin(w * t)
    energy = 0.5 * (p_l * p_l + init.J * init.J + w * w * l * l)
    return ClassicalSample(t=t, phi=phi, l=l, p_l=p_l, energy=energy)


def _convergents(x):
    """Continued-fraction convergents p/q of a float, exact via Fraction arithmetic."""
    frac = Fraction(x)
    p_prev, q_prev = 1, 0
    p, q = int(frac), 1
    frac -= int(frac)
    yield p, q
    while frac:
        frac = 1 / frac
        a = int(frac)
        frac -= a
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        yield p, q


def is_periodic(cfg, J, tol=1e-9, max_denominator=10**6):
    """Commensurability test of omega and the angular velocity J.

    Returns (periodic, period).  Commensurable means some convergent p/q of
    omega/|J| with q <= max_denominator satisfies |q*omega - p*|J|| <= tol;
    the corresponding least common period is q * 2pi/|J|.  The resonance-style
    criterion |q*omega - p*J| (rather than |omega/J - p/q|) rejects
    well-approximable irrationals such as the golden ratio at this cap while
    accepting exact rationals.
    """
    w = cfg.omega
    if J == 0:
        return True, TWO_PI / w
    ratio = w / abs(J)
    for p, q in _convergents(ratio):
        if q > max_denominator:
            break
        if q > 0 and abs(q * w - p * abs(J)) <= tol:
            return True, q * TWO_PI / abs(J)
    return False, None
