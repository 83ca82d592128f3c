import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FIG1
from nonnormal.errors import DomainError
from nonnormal.numrange import (
    axes_parametrized,
    ellipse_2x2,
    jordan_block,
    jordan_disk,
    matrix_from_angle,
    nr_boundary_sample,
    numerical_abscissa,
    omega_A,
    omega_logD,
    uhlig_axes,
)
from nonnormal.oracle import rayleigh_samples
from nonnormal.testing import complex_normal

# omega_A for the reference example parameters, evaluated in 30-digit arithmetic
FIG1_OMEGA = 0.340280823475138628358738257318

coords = st.floats(-3, 3, allow_nan=False)
angles = st.floats(0.05, math.pi / 2)


class TestEllipse:
    def test_normal_matrix_degenerates_to_segment(self):
        e = ellipse_2x2(np.diag([-1.0 + 0.5j, -3.0]))
        assert e.minor_axis == pytest.approx(0.0, abs=1e-12)
        # the segment joining the foci
        assert e.major_axis == pytest.approx(abs(-1.0 + 0.5j - (-3.0)), rel=1e-12)
        assert set(np.round(e.foci, 12)) == {np.round(-1.0 + 0.5j, 12), -3.0}

    def test_parametrized_axes(self):
        l1, l2, th = FIG1["lambda1"], FIG1["lambda2"], FIG1["theta"]
        a = matrix_from_angle(l1, l2, th, 0.7)
        major, minor = uhlig_axes(a)
        ref_major, ref_minor = axes_parametrized(l1, l2, th)
        assert major == pytest.approx(ref_major, rel=1e-12)
        assert minor == pytest.approx(ref_minor, rel=1e-12)
        # geometric full axes are half the formula values
        e = ellipse_2x2(a)
        assert e.major_axis == pytest.approx(ref_major / 2, rel=1e-12)
        assert e.minor_axis == pytest.approx(ref_minor / 2, rel=1e-12)

    def test_jordan_block_is_circle_of_radius_half(self):
        e = ellipse_2x2(jordan_block(-0.3 + 0.2j, 2))
        assert e.major_axis == e.minor_axis == pytest.approx(1.0)
        assert np.allclose(e.shape_s, np.eye(2))
        assert np.allclose(np.abs(e.boundary(64) - e.center), 0.5)

    def test_example_matrix_centre(self, fig1):
        assert ellipse_2x2(fig1).center == -0.25 + 0.2j

    def test_shape_form_matches_sampled_boundary(self, rng):
        # the quadratic form equals det(S)/4 on the true boundary
        for _ in range(20):
            m = complex_normal(rng, (2, 2))
            e = ellipse_2x2(m)
            pts = nr_boundary_sample(m, 64)
            target = np.linalg.det(e.shape_s) / 4
            assert np.allclose(e.quadratic_form(pts), target, rtol=1e-8, atol=1e-10)

    @settings(max_examples=200, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_focal_identity_and_order(self, seed):
        m = complex_normal(np.random.default_rng(seed), (2, 2))
        e = ellipse_2x2(m)
        assert e.major_axis >= e.minor_axis >= 0
        assert abs((e.foci[0] + e.foci[1]) / 2 - e.center) <= 1e-12 * (1 + abs(e.center))
        focal = abs(e.foci[0] - e.center) ** 2
        assert abs((e.major_axis / 2) ** 2 - (e.minor_axis / 2) ** 2 - focal) <= 1e-9 * (1 + focal)

    @settings(max_examples=300, deadline=None)
    @given(coords, coords, coords, coords, angles, st.floats(0, 2 * math.pi))
    def test_general_axes_equal_parametrized(self, a, b, c, d, theta, phi):
        l1, l2 = complex(a, b), complex(c, d)
        if abs(l1 - l2) < 1e-3:
            return
        m = matrix_from_angle(l1, l2, theta, phi)
        got = uhlig_axes(m)
        ref = axes_parametrized(l1, l2, theta)
        assert got[0] == pytest.approx(ref[0], rel=1e-10, abs=1e-10)
        assert got[1] == pytest.approx(ref[1], rel=1e-10, abs=1e-10)
        # shape diagnostic: minor/major = cos(theta)
        assert ellipse_2x2(m).axis_ratio == pytest.approx(math.cos(theta), abs=1e-10)

    def test_ratio_tends_to_circle(self):
        ratios = [ellipse_2x2(matrix_from_angle(-1, -2 + 1j, th)).axis_ratio for th in (1.0, 0.1, 0.01, 0.001)]
        assert all(x < y for x, y in zip(ratios, ratios[1:]))
        assert ratios[-1] > 1 - 1e-6

    def test_rayleigh_quotients_inside(self, rng):
        for _ in range(10):
            m = complex_normal(rng, (2, 2))
            e = ellipse_2x2(m)
            z = rayleigh_samples(m, 10_000, seed=int(rng.integers(1 << 30)))
            assert np.max(e.outside_distance(z)) <= 1e-9

    def test_ellipse_omega_matches_hermitian(self, rng):
        for _ in range(20):
            m = complex_normal(rng, (2, 2))
            assert ellipse_2x2(m).omega == pytest.approx(numerical_abscissa(m), abs=1e-10)

    def test_rejects_3x3(self):
        with pytest.raises(DomainError):
            ellipse_2x2(np.eye(3))


class TestNumericalAbscissa:
    def test_normal(self):
        assert numerical_abscissa(np.diag([-1.0, -3.0])) == pytest.approx(-1.0, abs=1e-15)

    def test_jordan(self):
        assert numerical_abscissa(jordan_block(-0.4 + 0.2j, 2)) == pytest.approx(0.1, abs=1e-14)

    def test_example_matrix(self, fig1):
        omega = numerical_abscissa(fig1)
        assert omega > 0
        assert omega == pytest.approx(FIG1_OMEGA, abs=1e-12)

    def test_sampling_never_exceeds(self, rng):
        for n in (2, 4, 7):
            m = complex_normal(rng, (n, n))
            z = rayleigh_samples(m, 5000, seed=3)
            assert np.max(z.real) <= numerical_abscissa(m) + 1e-9


class TestOmegaA:
    def test_normal_configuration(self):
        assert omega_A(-1, -3, math.pi / 2) == pytest.approx(-1.0, abs=1e-15)

    def test_example_matrix_value(self):
        assert omega_A(FIG1["lambda1"], FIG1["lambda2"], FIG1["theta"]) == pytest.approx(FIG1_OMEGA, abs=1e-14)

    def test_diverges_as_theta_shrinks(self):
        vals = [omega_A(-1, -1 + 2j, th) for th in (1.0, 0.5, 0.1, 0.01, 1e-4)]
        assert all(x < y for x, y in zip(vals, vals[1:]))
        assert vals[-1] > 1e3

    @pytest.mark.parametrize("theta", [0.0, -0.1, math.pi / 2 + 1e-9])
    def test_theta_domain(self, theta):
        with pytest.raises(DomainError):
            omega_A(-1, -2, theta)

    def test_equal_eigenvalues(self):
        with pytest.raises(DomainError):
            omega_A(-1 + 1j, -1 + 1j, 0.3)

    @settings(max_examples=300, deadline=None)
    @given(coords, coords, coords, coords, angles, st.floats(0, 2 * math.pi))
    def test_against_hermitian_part(self, a, b, c, d, theta, phi):
        l1, l2 = complex(a, b), complex(c, d)
        if abs(l1 - l2) < 1e-3:
            return
        m = matrix_from_angle(l1, l2, theta, phi)
        assert omega_A(l1, l2, theta) == pytest.approx(numerical_abscissa(m), abs=1e-9)


class TestJordanDisk:
    def test_radius_half(self):
        assert jordan_disk(0.3, 2).radius == pytest.approx(0.5, abs=1e-15)

    def test_size3(self):
        d = jordan_disk(-0.5, 3)
        assert d.radius == pytest.approx(math.sqrt(2) / 2, abs=1e-15)
        assert d.omega == pytest.approx(0.207106781186547524, abs=1e-15)

    def test_monotone_to_one(self):
        radii = [jordan_disk(0, k).radius for k in range(2, 200)]
        assert all(x < y for x, y in zip(radii, radii[1:]))
        assert all(0 <= r < 1 for r in radii)
        assert radii[-1] > 0.9998

    def test_size_domain(self):
        with pytest.raises(DomainError):
            jordan_disk(0, 1)

    @pytest.mark.parametrize("size", [2, 3, 4, 5, 6])
    def test_sampled_boundary_radius(self, size):
        lam = -0.3 + 0.4j
        pts = nr_boundary_sample(jordan_block(lam, size), 90)
        assert np.max(np.abs(pts - lam)) == pytest.approx(math.cos(math.pi / (size + 1)), abs=1e-6)
        assert numerical_abscissa(jordan_block(lam, size)) == pytest.approx(jordan_disk(lam, size).omega, abs=1e-12)


class TestBoundarySample:
    def test_scalar_matrix(self):
        assert np.allclose(nr_boundary_sample(np.eye(2), 16), 1.0, atol=1e-15)

    def test_nilpotent_circle(self):
        pts = nr_boundary_sample(jordan_block(0, 2), 40)
        assert np.allclose(np.abs(pts), 0.5, atol=1e-8)

    def test_normal_gives_endpoints(self):
        pts = nr_boundary_sample(np.diag([-1.0, -2.0]), 36)
        assert np.all(np.min(np.abs(pts[:, None] - np.array([-1.0, -2.0])), axis=1) <= 1e-12)

    def test_example_matrix_max_real(self, fig1):
        pts = nr_boundary_sample(fig1, 360)
        assert abs(np.max(pts.real) - omega_A(FIG1["lambda1"], FIG1["lambda2"], FIG1["theta"])) <= 1e-6

    def test_angular_order(self, fig1):
        pts = nr_boundary_sample(fig1, 360)
        c = ellipse_2x2(fig1).center
        ang = np.unwrap(np.angle(pts - c))
        assert np.all(np.diff(ang) > 0)

    def test_hull_contains_rayleigh_quotients(self, rng):
        # point-in-convex-polygon via signed cross products
        m = complex_normal(rng, (3, 3))
        pts = nr_boundary_sample(m, 400)
        z = rayleigh_samples(m, 5000, seed=11)
        edges = np.roll(pts, -1) - pts
        for w in z:
            cross = (edges.conj() * (w - pts)).imag
            assert np.min(cross) >= -1e-9 * np.max(np.abs(edges))

    def test_min_points(self):
        with pytest.raises(DomainError):
            nr_boundary_sample(np.eye(2), 2)


class TestOmegaLogD:
    def test_examples(self):
        assert omega_logD(0.5) == pytest.approx(0.306852819440054690, abs=1e-15)
        assert omega_logD(0.99) == math.log(0.99) + 1 / 1.98 > 0
        assert omega_logD(0.01) == math.log(0.01) + 50 > 0

    @pytest.mark.parametrize("lam", [0, 1, 1.5, -1j])
    def test_domain(self, lam):
        with pytest.raises(DomainError):
            omega_logD(lam)

    def test_matches_log_matrix(self):
        from nonnormal.linalg import matrix_log_principal

        for lam in (0.5, 0.9j, cmath.rect(0.2, 2.5)):
            log = matrix_log_principal(jordan_block(lam, 2))
            assert omega_logD(lam) == pytest.approx(numerical_abscissa(log), abs=1e-12)
