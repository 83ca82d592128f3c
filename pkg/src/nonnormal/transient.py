"""Transient-growth certificates from invariant subspaces.

A certificate names an invariant subspace (an eigenvector pair or a Jordan
chain) and tests the closed-form condition that makes the restriction of the
matrix to that subspace grow transiently. Growth of the restriction implies
growth of the whole matrix, so a true verdict certifies the matrix. A false
verdict certifies nothing: the conditions are sufficient only.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, InvarianceError
from .linalg import (
    CLUSTER_RTOL,
    RANK_TOL,
    EigenPair,
    as_matrix,
    as_vector,
    ctranspose,
    eigenpairs,
    frobenius_norm,
    log_branch_pair,
    spectral_norm,
    vector_angle,
)
from .numrange import numerical_abscissa, omega_A, omega_logD

INVARIANCE_RTOL = 1e-8


class Mode(str, enum.Enum):
    EXP = "exp"
    POW = "pow"


class Kind(str, enum.Enum):
    PAIR_ANGLE_EXP = "PairAngleExp"
    PAIR_ANGLE_POW = "PairAnglePow"
    JORDAN_EXP = "JordanExp"
    JORDAN_POW = "JordanPow"
    OFF_DIAGONAL_EXP = "OffDiagonalExp"


@dataclass(frozen=True)
class SubspaceCertificate:
    kind: Kind
    eig_indices: tuple[int, ...]
    theta: float | None
    threshold: float | None
    omega_restricted: float
    verdict: bool
    invariance_defect: float | None = None

    @property
    def mode(self) -> Mode:
        return Mode.POW if self.kind in (Kind.PAIR_ANGLE_POW, Kind.JORDAN_POW) else Mode.EXP


@dataclass(frozen=True)
class MatrixReport:
    eigenpairs: list[EigenPair]
    stable_exp: bool
    stable_pow: bool
    certificates: list[SubspaceCertificate]
    omega_full: float
    notes: list[str] = field(default_factory=list)

    @property
    def certified(self) -> list[SubspaceCertificate]:
        return [c for c in self.certificates if c.verdict]

    def certified_modes(self) -> set[Mode]:
        return {c.mode for c in self.certified}


def _require_distinct(lambda1, lambda2):
    if lambda1 == lambda2:
        raise DomainError("eigenvalues must be distinct")


def _require_left_half(*lams):
    for lam in lams:
        if not complex(lam).real < 0:
            raise DomainError(f"eigenvalue {lam} is not in the open left half plane")


def _require_unit_disk(*lams):
    for lam in lams:
        if not 0.0 < abs(lam) < 1.0:
            raise DomainError(f"eigenvalue {lam} is not in the punctured open unit disk")


def threshold_theta_exp(lambda1: complex, lambda2: complex) -> float:
    """Critical eigenvector angle below which e^{At} grows transiently."""
    _require_distinct(lambda1, lambda2)
    _require_left_half(lambda1, lambda2)
    lambda1, lambda2 = complex(lambda1), complex(lambda2)
    return math.atan2(abs(lambda1 - lambda2), 2 * math.sqrt(lambda1.real * lambda2.real))


def threshold_theta_pow(lambda1: complex, lambda2: complex) -> float:
    """Critical eigenvector angle for powers, using branch-paired logarithms."""
    _require_distinct(lambda1, lambda2)
    _require_unit_disk(lambda1, lambda2)
    log1, log2 = log_branch_pair(complex(lambda1), complex(lambda2))
    return math.atan2(abs(log1 - log2), 2 * math.sqrt(log1.real * log2.real))


def _check_theta(theta: float):
    if not 0.0 < theta <= math.pi / 2:
        raise DomainError("theta must lie in (0, pi/2]")


def check_pair(lambda1: complex, lambda2: complex, theta: float, mode: Mode | str = Mode.EXP,
               eig_indices: tuple[int, ...] = (0, 1)) -> SubspaceCertificate:
    mode = Mode(mode)
    _check_theta(theta)
    if mode is Mode.EXP:
        threshold = threshold_theta_exp(lambda1, lambda2)
        omega = omega_A(lambda1, lambda2, theta)
        kind = Kind.PAIR_ANGLE_EXP
    else:
        threshold = threshold_theta_pow(lambda1, lambda2)
        log1, log2 = log_branch_pair(complex(lambda1), complex(lambda2))
        omega = omega_A(log1, log2, theta)
        kind = Kind.PAIR_ANGLE_POW
    return SubspaceCertificate(kind, tuple(eig_indices), theta, threshold, omega, theta < threshold)


def _log_jordan_abscissa(lam: complex, size: int) -> float:
    """Numerical abscissa of log(J) for a size x size Jordan block J."""
    if size == 2:
        return omega_logD(lam)
    # log(lam I + N) = ln(lam) I + sum_k (-1)^{k+1} N^k / (k lam^k)
    log = np.eye(size, dtype=complex) * np.log(complex(lam))
    for k in range(1, size):
        log += np.eye(size, k=k) * ((-1) ** (k + 1) / (k * lam**k))
    return numerical_abscissa(log)


def check_jordan(lam: complex, size: int, mode: Mode | str = Mode.EXP, eig_indices: tuple[int, ...] = (0,)) -> SubspaceCertificate:
    mode = Mode(mode)
    if size < 2:
        raise DomainError("a Jordan subspace needs dimension >= 2")
    lam = complex(lam)
    if mode is Mode.EXP:
        _require_left_half(lam)
        radius = math.cos(math.pi / (size + 1))
        return SubspaceCertificate(Kind.JORDAN_EXP, tuple(eig_indices), None, None, lam.real + radius, lam.real > -radius)
    _require_unit_disk(lam)
    return SubspaceCertificate(Kind.JORDAN_POW, tuple(eig_indices), None, None, _log_jordan_abscissa(lam, size), True)


def check_offdiagonal(a: complex, lambda1: complex, lambda2: complex) -> SubspaceCertificate:
    """Condition on the Schur coupling of [[l1, a], [0, l2]]: |a| > 2 sqrt(Re l1 Re l2)."""
    _require_distinct(lambda1, lambda2)
    _require_left_half(lambda1, lambda2)
    lambda1, lambda2 = complex(lambda1), complex(lambda2)
    bound = 2 * math.sqrt(lambda1.real * lambda2.real)
    theta = math.atan2(abs(lambda2 - lambda1), abs(a))
    return SubspaceCertificate(
        Kind.OFF_DIAGONAL_EXP, (0, 1), theta, threshold_theta_exp(lambda1, lambda2),
        omega_A(lambda1, lambda2, theta), abs(a) > bound,
    )


def orthonormal_basis(basis) -> np.ndarray:
    """Orthonormal columns spanning the given vectors (modified Gram-Schmidt, twice)."""
    cols = [as_vector(b) for b in basis]
    out = []
    for v in cols:
        w = v.copy()
        for _ in range(2):
            for q in out:
                w = w - np.vdot(q, w) * q
        nrm = np.linalg.norm(w)
        if nrm <= 1e-14 * max(np.linalg.norm(v), 1e-300):
            raise DomainError("basis vectors are linearly dependent")
        out.append(w / nrm)
    return np.column_stack(out)


def invariance_defect(m, basis) -> float:
    """||(I - P P^H) m P||_2 / ||m||_2 for an orthonormalisation P of basis."""
    a = as_matrix(m)
    p = orthonormal_basis(basis)
    mp = a @ p
    resid = mp - p @ (ctranspose(p) @ mp)
    scale = spectral_norm(a)
    return spectral_norm(resid) / scale if scale else spectral_norm(resid)


def restrict(m, basis, invariance_tol: float = INVARIANCE_RTOL) -> np.ndarray:
    """Matrix of m restricted to span(basis) in an orthonormal basis: P^H m P."""
    a = as_matrix(m)
    defect = invariance_defect(a, basis)
    if defect > invariance_tol:
        raise InvarianceError(f"span is not invariant: relative defect {defect:.3e}", defect)
    p = orthonormal_basis(basis)
    return ctranspose(p) @ a @ p


def antieigen_angle(lambda1: float, lambda2: float) -> float:
    """Antieigenvalue arcsin(|l1-l2|/|l1+l2|) of a negative-definite 2x2 with real eigenvalues."""
    if not (lambda1 < 0 and lambda2 < 0):
        raise DomainError("antieigenvalue angle needs two negative real eigenvalues")
    if lambda1 == lambda2:
        raise DomainError("eigenvalues must be distinct")
    return math.asin(abs(lambda1 - lambda2) / abs(lambda1 + lambda2))


def scan(m, mode: Mode | str | None = None, cluster_tol: float | None = None,
         rank_tol: float = RANK_TOL, invariance_tol: float = INVARIANCE_RTOL) -> MatrixReport:
    """Evaluate every eigenvector-pair and Jordan-chain certificate of m.

    ``mode=None`` analyses exponentials and powers wherever their stability
    hypotheses hold; an explicit mode also raises DomainError when the
    hypotheses fail (powers of a singular matrix, for instance).
    """
    a = as_matrix(m)
    if cluster_tol is None:
        cluster_tol = CLUSTER_RTOL * frobenius_norm(a)
    pairs = eigenpairs(a, cluster_tol=cluster_tol, rank_tol=rank_tol)
    vals = [p.value for p in pairs]
    stable_exp = all(v.real < 0 for v in vals)
    stable_pow = all(0.0 < abs(v) < 1.0 for v in vals)
    singular = any(abs(v) <= cluster_tol for v in vals)
    mode = Mode(mode) if mode is not None else None
    if mode is Mode.POW and singular:
        raise DomainError("power analysis needs a nonsingular matrix")
    if mode is Mode.POW and not stable_pow:
        raise DomainError("power analysis needs all eigenvalues with 0 < |lambda| < 1")
    if mode is Mode.EXP and not stable_exp:
        raise DomainError("exponential analysis needs all eigenvalues with Re(lambda) < 0")
    modes = [md for md, ok in ((Mode.EXP, stable_exp), (Mode.POW, stable_pow)) if ok and mode in (None, md)]

    notes = []
    certs: list[SubspaceCertificate] = []
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            p, q = pairs[i], pairs[j]
            if abs(p.value - q.value) <= cluster_tol:
                continue
            theta = vector_angle(p.vector, q.vector)
            if theta <= 0.0:
                notes.append(f"pair ({i},{j}): eigenvectors numerically parallel, skipped")
                continue
            defect = invariance_defect(a, [p.vector, q.vector])
            if defect > invariance_tol:
                notes.append(f"pair ({i},{j}): invariance defect {defect:.3e} exceeds tolerance, skipped")
                continue
            for md in modes:
                c = check_pair(p.value, q.value, theta, md, eig_indices=(i, j))
                certs.append(_with_defect(c, defect))
    for i, p in enumerate(pairs):
        if p.chain_length < 2:
            continue
        for md in modes:
            certs.append(check_jordan(p.value, p.chain_length, md, eig_indices=(i,)))
    return MatrixReport(pairs, stable_exp, stable_pow, certs, numerical_abscissa(a), notes)


def _with_defect(c: SubspaceCertificate, defect: float) -> SubspaceCertificate:
    return SubspaceCertificate(c.kind, c.eig_indices, c.theta, c.threshold, c.omega_restricted, c.verdict, defect)
