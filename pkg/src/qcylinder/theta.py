"""Error-bounded Jacobi theta functions theta2 and theta3.

Conventions used throughout the package:

    theta3(v|tau) = sum_{n in Z} exp(i*pi*tau*n^2) * exp(2*pi*i*n*v)
    theta2(v|tau) = sum_{n in Z} exp(i*pi*tau*(n+1/2)^2) * exp((2n+1)*pi*i*v)

Both series converge for Im(tau) > 0; every use site in this package has
Im(tau) >= 1/(2*pi), so plain symmetric summation is always fast and no
modular transformation is needed.  Terms are accumulated pairwise
(n with -n) from the largest |n| down to 0 to reduce cancellation.

`v` may be a scalar or a numpy array (tau is always a scalar); array input
is evaluated with one truncation level chosen for the worst-case Im(v).
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import NonConvergentError, TruncationOverflowError

__all__ = ["Tolerance", "DEFAULT_TOL", "truncation_bound", "theta3", "theta2"]


@dataclass(frozen=True)
class Tolerance:
    """Absolute truncation-error request plus a hard cap on the summation index."""

    abs_tol: float = 1e-13
    max_terms: int = 64

    def __post_init__(self):
        if not (self.abs_tol > 0 and math.isfinite(self.abs_tol)):
            raise ValueError(f"abs_tol must be positive and finite, got {self.abs_tol}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms}")


DEFAULT_TOL = Tolerance()


def _check_tau(tau):
    tau = complex(tau)
    if not (math.isfinite(tau.real) and math.isfinite(tau.imag)):
        raise NonConvergentError(f"tau must be finite, got {tau}")
    if tau.imag <= 0.0:
        raise NonConvergentError(f"theta series needs Im(tau) > 0, got tau={tau}")
    return tau


def truncation_bound(tau, im_v, tol=DEFAULT_TOL):
    """Smallest N with sum_{|n|>N} |term| <= tol.abs_tol for the theta3 series.

    Term magnitude is exp(-pi*Im(tau)*n^2 + 2*pi*|im_v|*n); once past the
    magnitude peak the tail is bounded by a geometric series.  The same N is
    a valid cutoff for the theta2 series at the same (tau, im_v) because the
    half-integer term magnitudes interleave the integer ones.
    """
    tau = _check_tau(tau)
    a = math.pi * tau.imag
    b = 2.0 * math.pi * abs(im_v)

    def log_mag(x):
        return -a * x * x + b * x

    for n_cut in range(tol.max_terms + 1):
        x = n_cut + 1.0
        # geometric ratio of successive magnitudes, valid past the peak
        log_r = -a * (2.0 * x + 1.0) + b
        if log_r >= 0.0:
            continue
        r = math.exp(log_r)
        tail = 2.0 * math.exp(log_mag(x)) / (1.0 - r)
        if tail <= tol.abs_tol:
            return n_cut
    raise TruncationOverflowError(
        f"theta truncation needs more than {tol.max_terms} terms "
        f"for tau={tau}, |Im v|={abs(im_v)}, abs_tol={tol.abs_tol}"
    )


def theta3(v, tau, tol=DEFAULT_TOL):
    """theta3(v|tau) for scalar or array v; |error| <= tol.abs_tol."""
    tau = _check_tau(tau)
    if isinstance(v, (int, float, complex)):
        v = complex(v)
        n_cut = truncation_bound(tau, v.imag, tol)
        total = 0j
        for n in range(n_cut, 0, -1):
            lattice = cmath.exp(1j * math.pi * tau * n * n)
            total += lattice * (cmath.exp(2j * math.pi * n * v) + cmath.exp(-2j * math.pi * n * v))
        return total + 1.0

    v_arr = np.asarray(v, dtype=complex)
    im_max = float(np.max(np.abs(v_arr.imag))) if v_arr.size else 0.0
    n_cut = truncation_bound(tau, im_max, tol)
    total = np.zeros(v_arr.shape, dtype=complex)
    for n in range(n_cut, 0, -1):
        lattice = np.exp(1j * math.pi * tau * n * n)
        total += lattice * (np.exp(2j * math.pi * n * v_arr) + np.exp(-2j * math.pi * n * v_arr))
    total += 1.0
    return total


def theta2(v, tau, tol=DEFAULT_TOL):
    """theta2(v|tau) for scalar or array v; |error| <= tol.abs_tol."""
    tau = _check_tau(tau)
    if isinstance(v, (int, float, complex)):
        v = complex(v)
        n_cut = truncation_bound(tau, v.imag, tol)
        total = 0j
        for n in range(n_cut, -1, -1):
            half = n + 0.5
            lattice = cmath.exp(1j * math.pi * tau * half * half)
            phase = (2 * n + 1) * 1j * math.pi * v
            total += lattice * (cmath.exp(phase) + cmath.exp(-phase))
        return total

    v_arr = np.asarray(v, dtype=complex)
    im_max = float(np.max(np.abs(v_arr.imag))) if v_arr.size else 0.0
    n_cut = truncation_bound(tau, im_max, tol)
    total = np.zeros(v_arr.shape, dtype=complex)
    for n in range(n_cut, -1, -1):
        half = n + 0.5
        lattice = np.exp(1j * math.pi * tau * half * half)
        phase = (2 * n + 1) * 1j * math.pi * v_arr
        total += lattice * (np.exp(phase) + np.exp(-phase))
    return total
