import cmath
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from eigenbounds import geometry


def complex_numbers(max_mag=1e6):
    return st.builds(
        complex,
        st.floats(-max_mag, max_mag, allow_nan=False),
        st.floats(-max_mag, max_mag, allow_nan=False),
    )


class TestDelta:
    def test_negative_real_axis(self):
        assert geometry.delta(-1.0) == 1.0

    def test_right_half_plane_gives_imag(self):
        assert geometry.delta(1.0 + 1.0j) == 1.0

    def test_left_half_plane_gives_modulus(self):
        assert geometry.delta(-3.0 + 4.0j) == 5.0

    @given(complex_numbers())
    def test_below_modulus_and_zero_iff_on_halfline(self, z):
        d = geometry.delta(z)
        assert d <= abs(z) + 1e-12 * abs(z)
        on = z.imag == 0.0 and z.real >= 0.0
        assert (d == 0.0) == on

    @given(complex_numbers(1e3), st.floats(1e-3, 1e3))
    def test_scale_covariance(self, z, lam):
        # delta(lam^2 z) = lam^2 delta(z), exactly up to fp rounding
        assert geometry.delta(lam**2 * z) == pytest.approx(lam**2 * geometry.delta(z), rel=1e-12)


class TestSqrtNeg:
    def test_minus_one(self):
        assert geometry.sqrt_neg(-1.0) == pytest.approx(1.0)

    def test_minus_four(self):
        assert geometry.sqrt_neg(-4.0) == pytest.approx(2.0)

    def test_square_back(self):
        w = geometry.sqrt_neg(1.0j)
        assert w.real > 0
        assert abs(w**2 + 1.0j) < 1e-14

    def test_rejects_halfline(self):
        for z in (0.0, 1.0, 100.0):
            with pytest.raises(ValueError):
                geometry.sqrt_neg(z)

    @given(complex_numbers(1e4))
    def test_branch_on_dense_sample(self, z):
        if geometry.delta(z) <= 1e-12 * max(abs(z), 1.0):
            return
        w = geometry.sqrt_neg(z)
        assert w.real > 0
        assert abs(w * w + z) <= 1e-12 * max(abs(z), 1.0)


class TestConformalMap:
    def test_at_zero(self):
        assert geometry.psi(2.5, 0.0) == pytest.approx(-2.5)

    def test_at_half(self):
        assert geometry.psi(1.0, 0.5) == pytest.approx(-9.0)

    def test_inverse_of_minus_a(self):
        assert geometry.psi_inv(2.0, -2.0) == pytest.approx(0.0)

    def test_inverse_of_minus_nine_a(self):
        assert geometry.psi_inv(1.0, -9.0) == pytest.approx(0.5)

    def test_round_trip_on_disk_grid(self):
        for a in (0.5, 1.0, 7.0):
            for r in (0.0, 0.3, 0.7, 0.95):
                for t in np.linspace(0.0, 2.0 * math.pi, 17):
                    w = r * cmath.exp(1j * t)
                    z = geometry.psi(a, w)
                    assert geometry.delta(z) > 0.0
                    assert abs(geometry.psi_inv(a, z) - w) < 1e-12

    def test_round_trip_random_z(self):
        rng = np.random.default_rng(2)
        for _ in range(50):
            z = complex(rng.uniform(-20, 20), rng.uniform(-20, 20))
            if geometry.delta(z) < 1e-6:
                continue
            w = geometry.psi_inv(3.0, z)
            assert abs(w) < 1.0
            assert abs(geometry.psi(3.0, w) - z) < 1e-12 * max(abs(z), 1.0)

    def test_domain_checks(self):
        with pytest.raises(ValueError):
            geometry.psi(1.0, 1.0 + 0.0j)
        with pytest.raises(ValueError):
            geometry.psi(-1.0, 0.0)
        with pytest.raises(ValueError):
            geometry.psi_inv(1.0, 4.0)


class TestKoebe:
    def test_equality_at_center(self):
        a = 1.7
        assert geometry.koebe_lower(a, 0.0) == pytest.approx(a)
        assert geometry.delta(geometry.psi(a, 0.0)) == pytest.approx(a)

    def test_half_point_arithmetic(self):
        # a*(3/2)*(1/2)/(1/8) = 6a below delta(-9a) = 9a
        a = 2.0
        assert geometry.koebe_lower(a, 0.5) == pytest.approx(6.0 * a)
        assert geometry.delta(geometry.psi(a, 0.5)) == pytest.approx(9.0 * a)

    def test_lower_bound_on_disk_grid(self):
        # radial-angular sweep, boundary annulus excluded where the bound degenerates
        radii = np.linspace(0.0, 1.0 - 1e-3, 64)
        angles = np.linspace(0.0, 2.0 * math.pi, 128, endpoint=False)
        for a in (0.5, 2.0):
            for r in radii[::4]:
                for t in angles[::8]:
                    w = r * cmath.exp(1j * t)
                    assert geometry.koebe_lower(a, w) <= geometry.delta(geometry.psi(a, w)) * (
                        1.0 + 1e-12
                    )


class TestSegmentDistance:
    def test_left_of_segment(self):
        a = 2.0
        assert geometry.dist_to_segment(-1.0 / a, a) == pytest.approx(1.0 / a)

    def test_projection_inside(self):
        a = 2.0
        assert geometry.dist_to_segment(1.0 / (2.0 * a) + 1.0j, a) == pytest.approx(1.0)

    def test_matches_brute_force(self):
        rng = np.random.default_rng(4)
        ts = np.linspace(0.0, 1.0, 100_000)
        for _ in range(20):
            a = rng.uniform(0.2, 5.0)
            x = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            brute = np.min(np.abs(x - ts / a))
            assert geometry.dist_to_segment(x, a) == pytest.approx(brute, abs=1e-6)


class TestResolventDistLower:
    def test_arithmetic_instance(self):
        # E = -3a with a = 1: bound 3/64 below dist((-2)^-1, [0,1]) = 1/2
        assert geometry.resolvent_dist_lower(-3.0, 1.0) == pytest.approx(3.0 / 64.0)
        assert geometry.dist_to_segment(1.0 / (-3.0 + 1.0), 1.0) == pytest.approx(0.5)

    def test_zero_on_halfline(self):
        assert geometry.resolvent_dist_lower(5.0, 1.0) == 0.0

    def test_rejects_pole(self):
        with pytest.raises(ValueError):
            geometry.resolvent_dist_lower(-2.0, 2.0)

    def test_lower_bound_random_sweep(self):
        rng = np.random.default_rng(5)
        for _ in range(500):
            a = rng.uniform(1.0, 10.0)
            e = complex(rng.uniform(-30, 30), rng.uniform(-30, 30))
            if abs(e + a) < 1e-9:
                continue
            lower = geometry.resolvent_dist_lower(e, a)
            actual = geometry.dist_to_segment(1.0 / (e + a), a)
            assert lower <= actual * (1.0 + 1e-12)
