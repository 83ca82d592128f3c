import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FIG1
from nonnormal.errors import DomainError
from nonnormal.linalg import frobenius_norm, spectral_norm
from nonnormal.numrange import jordan_block, numerical_abscissa, omega_A
from nonnormal.oracle import (
    confirm_exp,
    confirm_pow,
    default_horizon,
    derivative_at_zero,
    rayleigh_samples,
    sampled_norm_lower_bound,
    sweep_exp,
    sweep_pow,
    sweep_pow_continuous,
)
from nonnormal.testing import complex_normal, random_nonnormal, random_normal_matrix, random_stable_eigenvalues
from nonnormal.transient import Mode, scan


def is_nonincreasing(x, slack=1e-12):
    return bool(np.all(np.diff(x) <= slack))


class TestSweepExp:
    def test_normal_decays(self):
        c = sweep_exp(np.diag([-1.0, -2.0]), 10, 500)
        assert is_nonincreasing(c.norms)
        assert c.peak == (0.0, pytest.approx(1.0, abs=1e-12))
        assert not c.exceeds_one()

    def test_example_matrix_transient(self, fig1):
        c = sweep_exp(fig1, 10, 1000)
        t, peak = c.peak
        assert t > 0 and peak > 1 + 1e-9

    def test_jordan_inside_region(self):
        assert sweep_exp(jordan_block(-0.4, 2), 20, 2000).exceeds_one()

    def test_grid(self, fig1):
        c = sweep_exp(fig1, 3.0, 30)
        assert c.parameter_name == "t"
        assert len(c.samples) == 31
        assert c.parameters[0] == 0.0 and c.parameters[-1] == 3.0
        assert c.norms[0] == pytest.approx(1.0, abs=1e-12)

    def test_against_direct_expm(self, fig1):
        # stepped powers vs fresh exponentials at each grid point
        from nonnormal.linalg import matrix_exponential

        c = sweep_exp(fig1, 5.0, 50)
        direct = [spectral_norm(matrix_exponential(fig1, t)) for t in c.parameters]
        assert np.allclose(c.norms, direct, atol=1e-12)

    @pytest.mark.parametrize("args", [(0.0, 10), (-1.0, 10), (1.0, 1)])
    def test_domain(self, args):
        with pytest.raises(DomainError):
            sweep_exp(np.eye(2), *args)

    def test_step_halving(self, fig1):
        coarse = sweep_exp(fig1, 10, 10_000).peak[1]
        fine = sweep_exp(fig1, 10, 20_000).peak[1]
        assert abs(coarse - fine) < 1e-6


class TestSweepPow:
    def test_diag_monotone(self):
        c = sweep_pow(np.diag([0.5, 0.9]), 50)
        assert is_nonincreasing(c.norms)
        assert np.allclose(c.norms, 0.9 ** c.parameters, rtol=1e-13)

    def test_jordan_peak(self):
        c = sweep_pow(jordan_block(0.9, 2), 60)
        n, peak = c.peak
        assert n >= 1 and peak > 1

    def test_scalar_exact(self):
        c = sweep_pow(0.5 * np.eye(3), 40)
        assert np.array_equal(c.norms, 0.5 ** np.arange(41))

    def test_domain(self):
        with pytest.raises(DomainError):
            sweep_pow(np.eye(2), 0)


class TestSweepPowContinuous:
    def test_diag(self):
        c = sweep_pow_continuous(np.diag([0.5, 0.9]), 20, 200)
        assert c.parameter_name == "s"
        assert np.allclose(c.norms, 0.9 ** c.parameters, rtol=1e-11)

    def test_jordan_exceeds(self):
        assert sweep_pow_continuous(jordan_block(0.9, 2), 50, 5000).exceeds_one()

    def test_integer_agreement(self, rng):
        for _ in range(30):
            m = random_nonnormal(rng, 2)
            n_max = 20
            cont = sweep_pow_continuous(m, n_max, n_max * 4)
            ints = sweep_pow(m, n_max)
            assert np.allclose(cont.norms[::4], ints.norms, atol=1e-8)

    def test_singular(self):
        with pytest.raises(DomainError):
            sweep_pow_continuous(np.diag([0.0, 0.5]), 5, 10)


class TestDerivativeAtZero:
    def test_normal(self):
        assert derivative_at_zero(np.diag([-1.0, -2.0])) == pytest.approx(-1.0, abs=1e-5)

    def test_jordan(self):
        assert derivative_at_zero(jordan_block(-0.4, 2)) == pytest.approx(0.1, abs=1e-5)

    def test_example_matrix(self, fig1):
        ref = omega_A(FIG1["lambda1"], FIG1["lambda2"], FIG1["theta"])
        assert abs(derivative_at_zero(fig1) - ref) < 1e-4

    @pytest.mark.parametrize("h", [0.0, -1e-6, 1e-3])
    def test_domain(self, h):
        with pytest.raises(DomainError):
            derivative_at_zero(np.eye(2), h)

    def test_sign_agrees_with_omega(self, rng):
        for _ in range(100):
            n = int(rng.integers(2, 7))
            m = complex_normal(rng, (n, n)) * 0.5 - rng.uniform(0, 2) * np.eye(n)
            w = numerical_abscissa(m)
            if abs(w) > 1e-3:
                assert np.sign(derivative_at_zero(m)) == np.sign(w)


class TestRayleigh:
    def test_identity(self):
        assert np.allclose(rayleigh_samples(np.eye(3), 100), 1.0, atol=1e-15)

    def test_real_segment(self):
        z = rayleigh_samples(np.diag([-1.0, -3.0]), 1000)
        assert np.all(np.abs(z.imag) <= 1e-12)
        assert np.all((z.real >= -3 - 1e-12) & (z.real <= -1 + 1e-12))

    def test_example_matrix_convergence(self, fig1):
        z = rayleigh_samples(fig1, 100_000)
        w = numerical_abscissa(fig1)
        gap = w - np.max(z.real)
        assert 0 <= gap < 0.05

    def test_seeded(self, fig1):
        assert np.array_equal(rayleigh_samples(fig1, 50, seed=7), rayleigh_samples(fig1, 50, seed=7))
        assert not np.array_equal(rayleigh_samples(fig1, 50, seed=7), rayleigh_samples(fig1, 50, seed=8))

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 2**32 - 1), st.integers(1, 6))
    def test_bounded_by_abscissa(self, seed, n):
        m = complex_normal(np.random.default_rng(seed), (n, n))
        assert np.max(rayleigh_samples(m, 500, seed).real) <= numerical_abscissa(m) + 1e-9

    def test_count_domain(self):
        with pytest.raises(DomainError):
            rayleigh_samples(np.eye(2), 0)


class TestSampledNorm:
    def test_bounds(self, rng):
        # lower bound never exceeds the SVD norm; in 2-D the sampled maximum is nearly sharp
        for n in (2, 3, 5):
            m = complex_normal(rng, (n, n))
            lower = sampled_norm_lower_bound(m)
            assert lower <= spectral_norm(m) + 1e-12
            if n == 2:
                assert lower >= spectral_norm(m) - 1e-3


class TestNoFalseAlarm:
    def test_normal_matrices(self, rng):
        for _ in range(30):
            n = int(rng.integers(2, 6))
            m = random_normal_matrix(rng, n)
            c = sweep_exp(m, 20, 400)
            assert c.peak[0] == 0.0 and abs(c.peak[1] - 1) <= 1e-9
            p = sweep_pow(m, 50)
            assert p.peak[0] == 0.0 and abs(p.peak[1] - 1) <= 1e-9


class TestConfirm:
    def test_horizon(self):
        assert default_horizon([-0.5, -2.0]) == pytest.approx(100.0)
        with pytest.raises(DomainError):
            default_horizon([-0.5, 0.0])

    def test_example_matrix(self, fig1):
        c = confirm_exp(fig1)
        assert c.confirmed and c.peak_parameter > 0
        p = confirm_pow(fig1)
        assert p.method == "sweep_pow_continuous"

    def test_defective_large_falls_back(self):
        c = confirm_pow(jordan_block(0.8, 3))
        assert c.method == "sweep_pow" and c.confirmed

    def test_integer_gap_flag(self):
        # continuous relaxation exceeds 1 strictly between integers only
        m = np.array([[0.557 + 0.375j, 0.587], [0, 0.267 - 0.433j]])
        c = confirm_pow(m, s_max=60, steps=6000, n_max=60)
        assert c.confirmed and 0 < c.peak_parameter < 1
        assert c.integer_peak_norm == pytest.approx(1.0, abs=1e-12)
        assert c.integer_gap
        assert not confirm_pow(jordan_block(0.9, 2)).integer_gap

    def test_soundness_small_corpus(self, rng):
        for _ in range(15):
            m = random_nonnormal(rng, int(rng.integers(2, 5)), coupling=1.5)
            r = scan(m)
            modes = r.certified_modes()
            if Mode.EXP in modes:
                assert confirm_exp(m).confirmed
            if Mode.POW in modes:
                assert confirm_pow(m).confirmed

    def test_deterministic(self, fig1):
        a = sweep_exp(fig1, 10, 777).norms
        b = sweep_exp(fig1.copy(), 10, 777).norms
        assert np.array_equal(a, b)
