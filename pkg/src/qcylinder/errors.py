"""Exception types shared across the package."""


class NonConvergentError(ValueError):
    """Theta series cannot converge (lattice parameter not in the upper half-plane)."""


class TruncationOverflowError(RuntimeError):
    """The requested truncation error needs more terms than the hard cap allows."""


class CutoffTooSmallError(ValueError):
    """Fourier cutoff leaves a tail coefficient above the oracle tolerance."""
