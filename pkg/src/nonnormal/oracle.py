"""Brute-force checks: norm sweeps of e^{Mt} and M^n, finite differences, Rayleigh sampling.

Nothing here uses the closed-form thresholds; the sweeps only multiply
matrices and take spectral norms, so they serve as an independent referee
for the certificates in :mod:`nonnormal.transient`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, UnsupportedShapeError
from .linalg import (
    as_matrix,
    eigenvalues,
    matrix_exponential,
    matrix_log_principal,
    spectral_norm,
    spectral_norms,
)

ORACLE_THRESHOLD = 1e-9
DEFAULT_SEED = 42
HORIZON_FACTOR = 50.0


@dataclass(frozen=True)
class SweepCurve:
    parameter_name: str
    parameters: np.ndarray
    norms: np.ndarray

    @property
    def samples(self) -> list[tuple[float, float]]:
        return list(zip(self.parameters.tolist(), self.norms.tolist()))

    @property
    def peak(self) -> tuple[float, float]:
        k = int(np.argmax(self.norms))
        return float(self.parameters[k]), float(self.norms[k])

    def exceeds_one(self, threshold: float = ORACLE_THRESHOLD) -> bool:
        return self.peak[1] > 1.0 + threshold


def _stepped_norms(step: np.ndarray, count: int) -> np.ndarray:
    """Norms of step**k for k = 0..count, products accumulated in index order."""
    n = step.shape[0]
    stack = np.empty((count + 1, n, n), dtype=complex)
    stack[0] = np.eye(n)
    for k in range(1, count + 1):
        stack[k] = stack[k - 1] @ step
    return spectral_norms(stack)


def sweep_exp(m, t_max: float, steps: int) -> SweepCurve:
    """||e^{m t}||_2 on t = 0, dt, ..., t_max with dt = t_max/steps.

    The grid values are powers of the single step e^{m dt}.
    """
    a = as_matrix(m)
    if t_max <= 0:
        raise DomainError("t_max must be positive")
    if steps < 2:
        raise DomainError("need at least 2 steps")
    ts = np.linspace(0.0, t_max, steps + 1)
    step = matrix_exponential(a, t_max / steps)
    return SweepCurve("t", ts, _stepped_norms(step, steps))


def sweep_pow(m, n_max: int) -> SweepCurve:
    """||m^n||_2 for integers n = 0..n_max."""
    a = as_matrix(m)
    if n_max < 1:
        raise DomainError("n_max must be at least 1")
    return SweepCurve("n", np.arange(n_max + 1, dtype=float), _stepped_norms(a, n_max))


def sweep_pow_continuous(m, s_max: float, steps: int) -> SweepCurve:
    """||e^{s log m}||_2 on a uniform grid in s, the real-exponent relaxation of m^n."""
    log = matrix_log_principal(m)
    curve = sweep_exp(log, s_max, steps)
    return SweepCurve("s", curve.parameters, curve.norms)


def derivative_at_zero(m, h: float = 1e-6) -> float:
    """Forward difference (||e^{m h}|| - 1)/h, the initial growth rate of ||e^{m t}||."""
    if not 0.0 < h <= 1e-4:
        raise DomainError("h must lie in (0, 1e-4]")
    return (spectral_norm(matrix_exponential(m, h)) - 1.0) / h


def random_unit_vectors(n: int, count: int, seed: int = DEFAULT_SEED) -> np.ndarray:
    """count x n array of complex Gaussian vectors scaled to unit length."""
    rng = np.random.default_rng(seed)
    x = rng.standard_normal((count, n)) + 1j * rng.standard_normal((count, n))
    return x / np.linalg.norm(x, axis=1, keepdims=True)


def rayleigh_samples(m, count: int, seed: int = DEFAULT_SEED) -> np.ndarray:
    """x^H m x for seeded random unit vectors x: points of the numerical range."""
    a = as_matrix(m)
    if count < 1:
        raise DomainError("count must be at least 1")
    x = random_unit_vectors(a.shape[0], count, seed)
    return np.einsum("ki,ij,kj->k", x.conj(), a, x)


def sampled_norm_lower_bound(m, count: int = 10_000, seed: int = DEFAULT_SEED) -> float:
    """max ||m x|| over random unit x; never exceeds the spectral norm."""
    a = as_matrix(m, square=False)
    x = random_unit_vectors(a.shape[1], count, seed)
    return float(np.max(np.linalg.norm(x @ a.T, axis=1)))


def default_horizon(rates) -> float:
    """50/|max rate|, the sweep horizon for decay rates ``rates`` (Re lambda or ln|lambda|)."""
    top = max(float(r) for r in rates)
    if top >= 0:
        raise DomainError("horizon heuristic needs strictly decaying modes")
    return HORIZON_FACTOR / abs(top)


def exp_horizon(m) -> float:
    return default_horizon(np.real(eigenvalues(m)))


def pow_horizon(m) -> float:
    return default_horizon(np.log(np.abs(eigenvalues(m))))


@dataclass(frozen=True)
class Confirmation:
    mode: str
    method: str
    peak_parameter: float
    peak_norm: float
    confirmed: bool
    integer_peak_norm: float | None = None

    @property
    def integer_gap(self) -> bool:
        """Continuous relaxation exceeds 1 but the integer-n sweep does not."""
        return self.integer_peak_norm is not None and self.confirmed and self.integer_peak_norm <= 1.0 + ORACLE_THRESHOLD


def confirm_exp(m, t_max: float | None = None, steps: int = 10_000, threshold: float = ORACLE_THRESHOLD) -> Confirmation:
    if t_max is None:
        t_max = exp_horizon(m)
    curve = sweep_exp(m, t_max, steps)
    t, peak = curve.peak
    return Confirmation("exp", "sweep_exp", t, peak, curve.exceeds_one(threshold))


def confirm_pow(m, s_max: float | None = None, steps: int = 10_000, n_max: int | None = None,
                threshold: float = ORACLE_THRESHOLD) -> Confirmation:
    """Confirm power transience via the continuous sweep, reporting the integer sweep too.

    Defective matrices larger than 2x2 have no supported logarithm; they fall
    back to the integer sweep alone.
    """
    if s_max is None:
        s_max = pow_horizon(m)
    if n_max is None:
        n_max = min(max(1, int(math.ceil(s_max))), 10_000)
    integer = sweep_pow(m, n_max)
    try:
        curve = sweep_pow_continuous(m, s_max, steps)
    except UnsupportedShapeError:
        n, peak = integer.peak
        return Confirmation("pow", "sweep_pow", n, peak, integer.exceeds_one(threshold), integer.peak[1])
    s, peak = curve.peak
    return Confirmation("pow", "sweep_pow_continuous", s, peak, curve.exceeds_one(threshold), integer.peak[1])
