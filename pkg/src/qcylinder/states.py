"""Coherent states on the cylinder and their exact time evolution.

The wavefunction factorizes into an angular part (a theta function of
(phi - alpha - iJ)/(2*pi) whose lattice parameter (i - t)/(2*pi) carries the
time dependence) and a meridian part (a Gaussian wave packet of an ordinary
harmonic oscillator).  Every closed-form quantity here has an independent
oracle built from a truncated Fourier expansion of the angular part plus the
exactly evolved Gaussian: `oracle_density` and `oracle_expectation_u` never
touch the theta module.
"""

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import CutoffTooSmallError
from .theta import DEFAULT_TOL, Tolerance, theta2, theta3

TWO_PI = 2.0 * math.pi

__all__ = [
    "CoherentParams",
    "OscillatorConfig",
    "CylinderPoint",
    "FourierGaussianState",
    "DensityGrid",
    "TrajectorySample",
    "coherent_state",
    "evolved_state",
    "density",
    "density_grid",
    "norm_constant",
    "fourier_coefficients",
    "oracle_density",
    "expectation_u",
    "oracle_expectation_u",
    "expectation_l",
    "mean_trajectory",
]


def _require_finite(name, value):
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value}")


@dataclass(frozen=True)
class CoherentParams:
    """Coherent-state label: angular momentum J, angle alpha, and the meridian
    wave-packet center (q_pos) and momentum (p_mom)."""

    J: float
    alpha: float
    q_pos: float = 0.0
    p_mom: float = 0.0

    def __post_init__(self):
        for name in ("J", "alpha", "q_pos", "p_mom"):
            _require_finite(name, getattr(self, name))
        object.__setattr__(self, "alpha", self.alpha % TWO_PI)


@dataclass(frozen=True)
class OscillatorConfig:
    """Meridian oscillator frequency."""

    omega: float = 1.0

    def __post_init__(self):
        _require_finite("omega", self.omega)
        if self.omega < 1e-6:
            raise ValueError(f"omega must be >= 1e-6 (wave-packet width diverges), got {self.omega}")


@dataclass(frozen=True)
class CylinderPoint:
    """Position on the cylinder: angle phi on the parallel, coordinate l on the meridian."""

    phi: float
    l: float

    def __post_init__(self):
        _require_finite("phi", self.phi)
        _require_finite("l", self.l)
        object.__setattr__(self, "phi", self.phi % TWO_PI)


@dataclass(frozen=True)
class FourierGaussianState:
    """Truncated Fourier representation of a coherent state.

    coeffs[n_max + n] is the coefficient of exp(i*n*phi) for |n| <= n_max; the
    meridian factor is the Gaussian wave packet centered at gauss_center with
    momentum gauss_momentum.  This is the oracle-side representation: angular
    evolution multiplies coefficient n by exp(-i*t*n^2/2), the Gaussian evolves
    along the classical meridian orbit.
    """

    n_max: int
    coeffs: np.ndarray
    gauss_center: float
    gauss_momentum: float

    def coefficient(self, n):
        return self.coeffs[self.n_max + n]

    @property
    def norm_squared(self):
        return float(np.sum(np.abs(self.coeffs) ** 2))


@dataclass(frozen=True)
class TrajectorySample:
    """One point of the quantum mean trajectory."""

    t: float
    phi: float
    l: float
    abs_u: float


@dataclass(frozen=True)
class DensityGrid:
    """Probability density sampled on a uniform (phi, l) grid.

    Values are relative to the measure (1/2pi) dphi dl, so `integral()` of a
    grid spanning the support is ~1.
    """

    phi_values: np.ndarray
    l_values: np.ndarray
    density: np.ndarray  # shape (len(phi_values), len(l_values))

    def __post_init__(self):
        if np.any(self.density < 0.0):
            raise ValueError("density grid contains negative entries")

    def integral(self):
        """Trapezoid quadrature of the density over the grid, measure (1/2pi) dphi dl."""
        inner = np.trapezoid(self.density, self.l_values, axis=1)
        return float(np.trapezoid(inner, self.phi_values) / TWO_PI)


def _angular_v(params, phi):
    return (np.asarray(phi) - params.alpha - 1j * params.J) / TWO_PI


def _evolving_tau(t):
    return (1j - t) / TWO_PI


def _meridian_center(params, cfg, t):
    w = cfg.omega
    return params.q_pos * math.cos(w * t) + (params.p_mom / w) * math.sin(w * t)


def coherent_state(params, cfg, at, tol=DEFAULT_TOL):
    """Coherent-state wavefunction at a cylinder point (t=0)."""
    w = cfg.omega
    angular = theta3(_angular_v(params, at.phi), 1j / TWO_PI, tol)
    dl = at.l - params.q_pos
    meridian = cmath.exp(-0.5 * w * dl * dl + 1j * params.p_mom * (at.l - 0.5 * params.q_pos))
    return (w / math.pi) ** 0.25 * angular * meridian


def evolved_state(params, cfg, at, t, tol=DEFAULT_TOL):
    """Solution of the Schroedinger equation at time t with the coherent state as initial data."""
    w = cfg.omega
    q, p, l = params.q_pos, params.p_mom, at.l
    angular = theta3(_angular_v(params, at.phi), _evolving_tau(t), tol)
    ph = cmath.exp(-1j * w * t)
    exponent = (
        -0.5 * w * l * l
        - 0.5 * w * q * q * ph * math.cos(w * t)
        - (0.5j / w) * p * p * ph * math.sin(w * t)
        - 0.5j * q * p * ph * ph
        + w * (q + 1j * p / w) * ph * l
    )
    return (w / math.pi) ** 0.25 * angular * cmath.exp(-0.5j * w * t) * cmath.exp(exponent)


@lru_cache(maxsize=512)
def norm_constant(J, tol=DEFAULT_TOL):
    """Squared norm of the coherent state: theta3(iJ/pi | i/pi), real and positive."""
    return theta3(1j * J / math.pi, 1j / math.pi, tol).real


def density(params, cfg, at, t, tol=DEFAULT_TOL):
    """Normalized probability density at one cylinder point and time."""
    w = cfg.omega
    angular = theta3(_angular_v(params, at.phi), _evolving_tau(t), tol)
    dl = at.l - _meridian_center(params, cfg, t)
    return (
        math.sqrt(w / math.pi)
        * abs(angular) ** 2
        / norm_constant(params.J, tol)
        * math.exp(-w * dl * dl)
    )


def density_grid(params, cfg, phi_values, l_values, t, tol=DEFAULT_TOL, norm_check=None):
    """Density on the outer product of phi_values and l_values at time t.

    The density factorizes, so the angular theta profile is evaluated once per
    phi and the Gaussian once per l.  If norm_check is given, the trapezoid
    integral must be within norm_check of 1.
    """
    w = cfg.omega
    phi_values = np.asarray(phi_values, dtype=float)
    l_values = np.asarray(l_values, dtype=float)
    angular = np.abs(theta3(_angular_v(params, phi_values), _evolving_tau(t), tol)) ** 2
    angular /= norm_constant(params.J, tol)
    dl = l_values - _meridian_center(params, cfg, t)
    meridian = math.sqrt(w / math.pi) * np.exp(-w * dl * dl)
    grid = DensityGrid(phi_values, l_values, np.outer(angular, meridian))
    if norm_check is not None:
        total = grid.integral()
        if abs(total - 1.0) > norm_check:
            raise ValueError(f"density grid integrates to {total}, outside 1 +/- {norm_check}")
    return grid


def fourier_coefficients(params, n_max=None, tail_tol=1e-13):
    """Angular Fourier coefficients c_n = exp(-n^2/2 + n*J - i*n*alpha) of the coherent state.

    The default cutoff |J| + 12 puts the relative tail coefficient below 1e-15.
    """
    if n_max is None:
        n_max = int(math.ceil(abs(params.J))) + 12
    needed = abs(params.J) + math.sqrt(2.0 * math.log(1.0 / tail_tol))
    if n_max < needed:
        raise CutoffTooSmallError(f"n_max={n_max} below required {needed:.1f} for J={params.J}")
    n = np.arange(-n_max, n_max + 1)
    coeffs = np.exp(-0.5 * n.astype(float) ** 2 + n * params.J) * np.exp(-1j * n * params.alpha)
    peak = float(np.max(np.abs(coeffs)))
    if max(abs(coeffs[0]), abs(coeffs[-1])) > tail_tol * peak:
        raise CutoffTooSmallError(f"tail coefficient above {tail_tol} of peak at n_max={n_max}")
    return FourierGaussianState(
        n_max=n_max,
        coeffs=coeffs,
        gauss_center=params.q_pos,
        gauss_momentum=params.p_mom,
    )


def oracle_density(state, cfg, at, t):
    """Density from the truncated Fourier sum; independent of the theta module."""
    w = cfg.omega
    n = np.arange(-state.n_max, state.n_max + 1)
    angular = np.sum(state.coeffs * np.exp(-0.5j * t * n**2) * np.exp(1j * n * at.phi))
    center = state.gauss_center * math.cos(w * t) + (state.gauss_momentum / w) * math.sin(w * t)
    dl = at.l - center
    return abs(angular) ** 2 / state.norm_squared * math.sqrt(w / math.pi) * math.exp(-w * dl * dl)


def expectation_u(params, t, tol=DEFAULT_TOL):
    """Expectation value of the angular position operator U in the evolved coherent state."""
    v = t / TWO_PI - 1j * params.J / math.pi
    return (
        math.exp(-0.25)
        * cmath.exp(1j * params.alpha)
        * theta2(v, 1j / math.pi, tol)
        / norm_constant(params.J, tol)
    )


def oracle_expectation_u(state, t):
    """<U(t)> from the Fourier coefficients: sum conj(c_{n+1}) c_n e^{it(n+1/2)} / sum |c_n|^2."""
    c = state.coeffs
    n = np.arange(-state.n_max, state.n_max)
    num = np.sum(np.conj(c[1:]) * c[:-1] * np.exp(1j * t * (n + 0.5)))
    return complex(num / state.norm_squared)


def expectation_l(params, cfg, t):
    """Mean meridian position: q cos(wt) + (p/w) sin(wt) (identical to the classical orbit)."""
    return _meridian_center(params, cfg, t)


def mean_trajectory(params, cfg, t_grid, tol=DEFAULT_TOL):
    """Quantum mean trajectory samples; phi is Arg<U(t)> reduced to [0, 2pi), never unwrapped."""
    samples = []
    for t in np.asarray(t_grid, dtype=float):
        u = expectation_u(params, float(t), tol)
        samples.append(
            TrajectorySample(
                t=float(t),
                phi=cmath.phase(u) % TWO_PI,
                l=expectation_l(params, cfg, float(t)),
                abs_u=abs(u),
            )
        )
    return samples
