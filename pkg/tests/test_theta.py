"""Theta evaluation: frozen examples plus randomized identity checks."""

import math

import numpy as np
import pytest

from qcylinder.errors import NonConvergentError, TruncationOverflowError
from qcylinder.theta import DEFAULT_TOL, Tolerance, theta2, theta3, truncation_bound

I_PI = 1j / math.pi
I_2PI = 1j / (2 * math.pi)


def brute_theta3(v, tau, n_span=40):
    return sum(
        np.exp(1j * math.pi * tau * n * n) * np.exp(2j * math.pi * n * v)
        for n in range(-n_span, n_span + 1)
    )


def brute_theta2(v, tau, n_span=40):
    return sum(
        np.exp(1j * math.pi * tau * (n + 0.5) ** 2) * np.exp((2 * n + 1) * 1j * math.pi * v)
        for n in range(-n_span, n_span + 1)
    )


class TestTheta3Examples:
    def test_gaussian_sum_at_origin(self):
        # direct summation of e^{-n^2} over |n| <= 6
        expected = sum(math.exp(-n * n) for n in range(-6, 7))
        val = theta3(0.0, I_PI)
        assert val == pytest.approx(expected, abs=1e-12)
        assert val.real == pytest.approx(1.772637, abs=1e-6)
        assert abs(val.imag) < 1e-14

    def test_period_one_in_v(self):
        for tau in (I_PI, I_2PI, (1j - 2.5) / (2 * math.pi)):
            assert theta3(1.0, tau) == pytest.approx(theta3(0.0, tau), abs=1e-12)

    def test_imaginary_shift_reindexes(self):
        # -n^2 - 2n = -(n+1)^2 + 1, so theta3(i/pi|i/pi) = e * theta3(0|i/pi)
        val = theta3(I_PI, I_PI)
        assert val == pytest.approx(math.e * theta3(0.0, I_PI), abs=1e-11)
        assert val.real == pytest.approx(4.8185275, abs=1e-6)


class TestTheta2Examples:
    def test_direct_sum(self):
        expected = sum(math.exp(-((n + 0.5) ** 2)) * math.exp(2 * n + 1) for n in range(-5, 6))
        val = theta2(-I_PI, I_PI)
        assert val == pytest.approx(expected, abs=1e-11)
        assert val.real == pytest.approx(4.8175, abs=1e-4)

    def test_period_two(self):
        v = 0.37 + 0.11j
        assert theta2(v + 2, I_PI) == pytest.approx(theta2(v, I_PI), abs=1e-12)

    def test_antiperiod_one(self):
        v = 0.37 + 0.11j
        assert theta2(v + 1, I_PI) == pytest.approx(-theta2(v, I_PI), abs=1e-12)


class TestTruncationBound:
    def test_worst_case_lattice(self):
        assert truncation_bound(I_2PI, 0.0, Tolerance(1e-15)) <= 12

    def test_faster_lattice(self):
        assert truncation_bound(I_PI, 0.0, Tolerance(1e-15)) <= 8

    def test_unit_tolerance(self):
        assert truncation_bound(I_2PI, 0.0, Tolerance(1.0)) <= 1

    def test_bound_actually_bounds(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            tau = (1j - rng.uniform(-3, 3)) / (2 * math.pi)
            im_v = rng.uniform(-1, 1)
            tol = Tolerance(10.0 ** rng.uniform(-14, -4))
            n_cut = truncation_bound(tau, im_v, tol)
            tail = sum(
                math.exp(-math.pi * tau.imag * n * n + 2 * math.pi * abs(im_v) * n)
                for n in range(n_cut + 1, n_cut + 200)
            )
            assert 2 * tail <= tol.abs_tol

    def test_overflow(self):
        with pytest.raises(TruncationOverflowError):
            truncation_bound(1e-9j, 0.0, Tolerance(1e-14, max_terms=16))


class TestErrors:
    def test_lower_half_plane_rejected(self):
        with pytest.raises(NonConvergentError):
            theta3(0.0, -I_PI)
        with pytest.raises(NonConvergentError):
            theta2(0.0, 0.5 + 0j)

    def test_nonfinite_rejected(self):
        with pytest.raises(NonConvergentError):
            theta3(0.0, complex("nan") + 1j)


class TestRandomizedIdentities:
    """Invariants over randomized v with |Im v| <= 1 and the lattice parameters in use."""

    def _samples(self, n=30, seed=11):
        rng = np.random.default_rng(seed)
        taus = [I_2PI, I_PI] + [(1j - t) / (2 * math.pi) for t in rng.uniform(0, 25, 3)]
        vs = rng.uniform(-2, 2, n) + 1j * rng.uniform(-1, 1, n)
        return [(v, tau) for v in vs for tau in taus]

    # rounding allowance on top of the truncation budget: individual terms can
    # reach ~1e7 when |Im v| = 1 at the slowest lattice parameter
    _ROUND = 5e-13

    def test_theta3_periodicity(self):
        for v, tau in self._samples():
            ref = theta3(v, tau)
            assert abs(theta3(v + 1, tau) - ref) <= 2 * DEFAULT_TOL.abs_tol + self._ROUND * abs(ref)

    def test_theta2_periodicity_and_antiperiod(self):
        for v, tau in self._samples(n=15):
            ref = theta2(v, tau)
            scale = self._ROUND * abs(ref)
            assert abs(theta2(v + 2, tau) - ref) <= 2 * DEFAULT_TOL.abs_tol + scale
            assert abs(theta2(v + 1, tau) + ref) <= 2 * DEFAULT_TOL.abs_tol + scale

    def test_tau_period_two(self):
        for v, tau in self._samples(n=15):
            ref = theta3(v, tau)
            assert abs(theta3(v, tau + 2) - ref) <= 2 * DEFAULT_TOL.abs_tol + self._ROUND * abs(ref)

    def test_quasi_periodicity(self):
        for v, tau in self._samples(n=10, seed=3):
            factor = np.exp(-1j * math.pi * tau - 2j * math.pi * v)
            lhs = theta3(v + tau, tau)
            rhs = factor * theta3(v, tau)
            assert abs(lhs - rhs) <= (2 * DEFAULT_TOL.abs_tol + 1e-12 * abs(rhs)) * max(
                1.0, abs(factor)
            )

    def test_conjugation_symmetry(self):
        for v, tau in self._samples(n=15, seed=5):
            lhs = theta3(np.conj(v), -np.conj(tau))
            rhs = np.conj(theta3(v, tau))
            assert abs(lhs - rhs) <= 2 * DEFAULT_TOL.abs_tol + 1e-13 * abs(rhs)

    def test_halving_tolerance_is_stable(self):
        for v, tau in self._samples(n=10, seed=9):
            for tol in (1e-8, 1e-10, 1e-12):
                coarse = theta3(v, tau, Tolerance(tol))
                fine = theta3(v, tau, Tolerance(tol / 2))
                assert abs(coarse - fine) <= tol
                coarse2 = theta2(v, tau, Tolerance(tol))
                fine2 = theta2(v, tau, Tolerance(tol / 2))
                assert abs(coarse2 - fine2) <= tol

    def test_matches_brute_force(self):
        for v, tau in self._samples(n=10, seed=21):
            assert theta3(v, tau) == pytest.approx(brute_theta3(v, tau), abs=1e-11, rel=1e-11)
            assert theta2(v, tau) == pytest.approx(brute_theta2(v, tau), abs=1e-11, rel=1e-11)


def test_array_input_matches_scalars():
    vs = np.array([0.1, 0.5 + 0.2j, -1.3 - 0.4j])
    arr = theta3(vs, I_2PI)
    for i, v in enumerate(vs):
        assert arr[i] == pytest.approx(theta3(complex(v), I_2PI), abs=1e-13)
