"""Phase-jump extraction around t* = (2k+1)*pi."""

import math

import numpy as np
import pytest

from qcylinder.jumps import circular_difference, jump_points, scan_discontinuities
from qcylinder.states import CoherentParams, OscillatorConfig, expectation_l

GOLDEN = (1 + math.sqrt(5)) / 2
FIG1 = CoherentParams(J=1.0, alpha=0.75 * math.pi, q_pos=-0.7, p_mom=0.2)
UNIT = OscillatorConfig(1.0)


class TestCircularDifference:
    def test_wraps_into_half_open_interval(self):
        assert circular_difference(0.1, 2 * math.pi - 0.1) == pytest.approx(0.2)
        assert circular_difference(2 * math.pi - 0.1, 0.1) == pytest.approx(-0.2)

    def test_exact_pi_is_positive(self):
        assert circular_difference(math.pi, 0.0) == math.pi


class TestJumpPoints:
    def test_pi_jump_at_first_time(self):
        cloud = jump_points(FIG1, UNIT, 0, 0, eps=1e-6)
        (point,) = cloud.points
        assert point.t_star == pytest.approx(math.pi)
        assert abs(point.delta_phi) == pytest.approx(math.pi, abs=1e-4)
        assert point.l == pytest.approx(expectation_l(FIG1, UNIT, math.pi))

    def test_two_sided_limits_stable_in_eps(self):
        reference = None
        for eps in (1e-4, 1e-6, 1e-8):
            cloud = jump_points(FIG1, UNIT, 0, 3, eps=eps)
            gaps = [abs(abs(p.delta_phi) - math.pi) for p in cloud.points]
            if reference is not None:
                for p, r in zip(cloud.points, reference):
                    assert abs(p.phi_minus - r.phi_minus) < 1e-3
                    assert abs(p.phi_plus - r.phi_plus) < 1e-3
            reference = cloud.points
            assert max(gaps) < 2e-2 if eps == 1e-4 else max(gaps) < 1e-4

    def test_golden_ratio_cloud_statistics(self):
        cfg = OscillatorConfig(GOLDEN)
        cloud = jump_points(FIG1, cfg, 0, 199, eps=1e-6)
        target = (FIG1.alpha - math.pi / 2) % (2 * math.pi)
        assert abs(circular_difference(cloud.mean_phi, target)) < 0.3

    def test_periodic_vs_quasiperiodic_l_sets(self):
        k_lo, k_hi = 0, 499

        def distinct_l(omega):
            cloud = jump_points(FIG1, OscillatorConfig(omega), k_lo, k_hi, eps=1e-6)
            ls = np.sort([p.l for p in cloud.points])
            return 1 + int((np.diff(ls) > 1e-9).sum())

        assert distinct_l(GOLDEN) == 500
        assert distinct_l(1.62) <= 50

    def test_non_integer_j_warns(self):
        with pytest.warns(UserWarning):
            cloud = jump_points(CoherentParams(J=0.5, alpha=0.0), UNIT, 0, 0)
        assert not cloud.integer_j
        assert len(cloud.points) == 1

    def test_jump_is_antipodal_map(self):
        # phase jump by pi means (x1, x2) -> (-x1, -x2) on the embedded cylinder
        cloud = jump_points(FIG1, UNIT, 0, 1, eps=1e-8)
        for p in cloud.points:
            x_minus = np.array([math.cos(p.phi_minus), math.sin(p.phi_minus)])
            x_plus = np.array([math.cos(p.phi_plus), math.sin(p.phi_plus)])
            assert np.allclose(x_plus, -x_minus, atol=1e-6)


class TestScanDiscontinuities:
    def test_flags_exactly_odd_pi_multiples(self):
        flagged = scan_discontinuities(FIG1, UNIT, 0.0, 8 * math.pi, dt=1e-3, threshold=1.0)
        expected = [math.pi, 3 * math.pi, 5 * math.pi, 7 * math.pi]
        assert len(flagged) == len(expected)
        for (t, delta), t_star in zip(flagged, expected):
            assert abs(t - t_star) <= 1e-3
            assert abs(delta) == pytest.approx(math.pi, abs=1e-2)

    def test_j_zero_jumps_at_same_times(self):
        params = CoherentParams(J=0.0, alpha=1.0)
        flagged = scan_discontinuities(params, UNIT, 0.0, 4 * math.pi, dt=1e-3, threshold=1.0)
        assert len(flagged) == 2
        for (t, _), t_star in zip(flagged, (math.pi, 3 * math.pi)):
            assert abs(t - t_star) <= 1e-3

    def test_threshold_above_pi_finds_nothing(self):
        assert scan_discontinuities(FIG1, UNIT, 0.0, 8 * math.pi, dt=5e-3, threshold=7.0) == []
