"""Coherent-state dynamics of the harmonic oscillator on a cylinder."""

from .classical import ClassicalInitial, ClassicalSample, classical_solution, is_periodic
from .errors import CutoffTooSmallError, NonConvergentError, TruncationOverflowError
from .jumps import JumpCloud, JumpPoint, jump_points, scan_discontinuities
from .states import (
    CoherentParams,
    CylinderPoint,
    DensityGrid,
    FourierGaussianState,
    OscillatorConfig,
    TrajectorySample,
    coherent_state,
    density,
    density_grid,
    evolved_state,
    expectation_l,
    expectation_u,
    fourier_coefficients,
    mean_trajectory,
    norm_constant,
    oracle_density,
    oracle_expectation_u,
)
from .theta import DEFAULT_TOL, Tolerance, theta2, theta3, truncation_bound

__version__ = "0.1.0"
