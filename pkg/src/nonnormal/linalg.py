"""Dense complex linear algebra: Schur form, eigenpairs, norms, exp/log/powers.

Matrices are ``numpy`` complex128 arrays. Decompositions (Hessenberg
reduction, shifted QR, Hermitian Jacobi, Taylor expm, Schur-Parlett log) are
written out here; numpy supplies array arithmetic and the SVD behind
:func:`spectral_norm`.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError, RangeError, UnsupportedShapeError

EPS = np.finfo(float).eps

# defaults; every public routine takes these as keyword overrides
DEFLATION_RTOL = 1e-14
CLUSTER_RTOL = 1e-8
RANK_TOL = 1e-6
EXPM_TERMS = 18
EXPM_SCALE_TARGET = 0.5


@dataclass(frozen=True)
class EigenPair:
    value: complex
    vector: np.ndarray
    chain_length: int = 1


@dataclass(frozen=True)
class SchurForm:
    q: np.ndarray
    t: np.ndarray

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.diag(self.t).copy()


def as_matrix(m, square: bool = True) -> np.ndarray:
    """Coerce to a finite complex128 2-D array, optionally requiring squareness."""
    a = np.array(m, dtype=complex)
    if a.ndim != 2:
        raise DomainError(f"expected a 2-D matrix, got shape {a.shape}")
    if square and a.shape[0] != a.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise DomainError("matrix has non-finite entries")
    return a


def as_vector(v) -> np.ndarray:
    a = np.array(v, dtype=complex).reshape(-1)
    if not np.all(np.isfinite(a)):
        raise DomainError("vector has non-finite entries")
    return a


def ctranspose(m: np.ndarray) -> np.ndarray:
    return m.conj().T


def frobenius_norm(m) -> float:
    a = np.asarray(m, dtype=complex)
    return math.sqrt(float(np.sum(a.real**2 + a.imag**2)))


def spectral_norm(m) -> float:
    """Largest singular value."""
    a = as_matrix(m, square=False)
    if a.size == 0:
        return 0.0
    return float(np.linalg.svd(a, compute_uv=False)[0])


def spectral_norms(stack: np.ndarray) -> np.ndarray:
    """Batched :func:`spectral_norm` over the leading axis of a (k, n, n) array."""
    return np.linalg.svd(stack, compute_uv=False)[..., 0]


def vector_angle(v1, v2) -> float:
    """Hermitian angle in [0, pi/2] between two nonzero complex vectors.

    Evaluated as atan2(sin, cos) so that nearly parallel vectors keep full
    relative accuracy; mathematically equal to arccos(|v1^H v2| / (|v1||v2|)).
    """
    a, b = as_vector(v1), as_vector(v2)
    na, nb = np.linalg.norm(a), np.linalg.norm(b)
    if na == 0.0 or nb == 0.0:
        raise DomainError("angle undefined for a zero vector")
    u1, u2 = a / na, b / nb
    inner = np.vdot(u1, u2)
    sin = np.linalg.norm(u2 - inner * u1)
    return float(math.atan2(sin, abs(inner)))


# -- Hermitian eigenproblem -------------------------------------------------


def hermitian_eigh(h, tol: float = 1e-15, max_sweeps: int = 60):
    """Cyclic Jacobi for a Hermitian matrix.

    Returns ``(w, v)`` with eigenvalues ascending and unit eigenvectors in the
    columns of ``v``. The input is symmetrised as (h + h^H)/2 first.
    """
    a = as_matrix(h)
    a = (a + ctranspose(a)) / 2
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = frobenius_norm(a)
    if n == 1 or scale == 0.0:
        w = a.diagonal().real.copy()
        order = np.argsort(w, kind="stable")
        return w[order], v[:, order]
    for _ in range(max_sweeps):
        off = frobenius_norm(a - np.diag(a.diagonal()))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= EPS * 1e-3 * scale:
                    continue
                app, aqq = a[p, p].real, a[q, q].real
                tau = (aqq - app) / (2 * mag)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + math.sqrt(1 + tau * tau))
                c = 1 / math.sqrt(1 + t * t)
                s = t * c
                phase = apq / mag
                # A <- U^H A U with U = [[c, s], [-s conj(phase), c conj(phase)]] on (p, q)
                sp, cp = s * phase, c * phase
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - sp.conjugate() * col_q
                a[:, q] = s * col_p + cp.conjugate() * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - sp * row_q
                a[q, :] = s * row_p + cp * row_q
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                col_p, col_q = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * col_p - sp.conjugate() * col_q
                v[:, q] = s * col_p + cp.conjugate() * col_q
    else:
        raise ConvergenceError("Jacobi iteration did not converge")
    w = a.diagonal().real.copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def hermitian_part(m) -> np.ndarray:
    a = as_matrix(m)
    return (a + ctranspose(a)) / 2


# -- Schur decomposition ----------------------------------------------------


def _givens(x: complex, y: complex) -> np.ndarray:
    """Unitary G with G @ [x, y] = [r, 0]."""
    ax = abs(x)
    r = math.hypot(ax, abs(y))
    if r == 0.0:
        return np.eye(2, dtype=complex)
    if ax == 0.0:
        return np.array([[0, 1], [-1, 0]], dtype=complex)
    c = ax / r
    s = (x / ax) * y.conjugate() / r
    return np.array([[c, s], [-s.conjugate(), c]])


def hessenberg(m):
    """Householder reduction: returns (q, h) with m = q h q^H, h upper Hessenberg."""
    h = as_matrix(m).copy()
    n = h.shape[0]
    q = np.eye(n, dtype=complex)
    for k in range(n - 2):
        x = h[k + 1 :, k].copy()
        tail = np.linalg.norm(x[1:])
        if tail == 0.0:
            continue
        nx = np.linalg.norm(x)
        phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        x[0] += phase * nx
        x /= np.linalg.norm(x)
        h[k + 1 :, :] -= 2 * np.outer(x, x.conj() @ h[k + 1 :, :])
        h[:, k + 1 :] -= 2 * np.outer(h[:, k + 1 :] @ x, x.conj())
        q[:, k + 1 :] -= 2 * np.outer(q[:, k + 1 :] @ x, x.conj())
        h[k + 2 :, k] = 0.0
    return q, h


def _wilkinson_shift(a, b, c, d) -> complex:
    """Eigenvalue of [[a, b], [c, d]] closer to d."""
    half = (a - d) / 2
    disc = cmath.sqrt(half * half + b * c)
    mu1 = (a + d) / 2 + disc
    mu2 = (a + d) / 2 - disc
    return mu1 if abs(mu1 - d) <= abs(mu2 - d) else mu2


def schur_decompose(m, deflation_rtol: float = DEFLATION_RTOL, max_iter_factor: int = 100) -> SchurForm:
    """Complex Schur form m = q t q^H by Hessenberg reduction and shifted QR.

    Deflation when a subdiagonal entry drops below
    ``deflation_rtol * ||m||_F`` (or below unit roundoff relative to its
    diagonal neighbours); the iteration cap is ``max_iter_factor * n``.
    """
    a = as_matrix(m)
    n = a.shape[0]
    if n == 0:
        return SchurForm(np.eye(0, dtype=complex), a.copy())
    z, h = hessenberg(a)
    tol = deflation_rtol * frobenius_norm(a)
    cap = max_iter_factor * n
    iters = 0
    since_deflation = 0
    hi = n - 1
    while hi > 0:
        # find the start of the active unreduced block
        lo = hi
        while lo > 0:
            sub = abs(h[lo, lo - 1])
            if sub <= tol or sub <= EPS * (abs(h[lo, lo]) + abs(h[lo - 1, lo - 1])):
                h[lo, lo - 1] = 0.0
                break
            lo -= 1
        if lo == hi:
            hi -= 1
            since_deflation = 0
            continue
        if iters >= cap:
            raise ConvergenceError(f"Schur QR iteration exceeded {cap} iterations")
        iters += 1
        since_deflation += 1
        if since_deflation % 11 == 0:
            # exceptional shift to break cycles
            mu = h[hi, hi] + 1.5 * abs(h[hi, hi - 1])
        else:
            mu = _wilkinson_shift(h[hi - 1, hi - 1], h[hi - 1, hi], h[hi, hi - 1], h[hi, hi])
        # implicit single-shift bulge chase on h[lo:hi+1, lo:hi+1]
        x, y = h[lo, lo] - mu, h[lo + 1, lo]
        for k in range(lo, hi):
            if k > lo:
                x, y = h[k, k - 1], h[k + 1, k - 1]
            g = _givens(x, y)
            c0 = max(lo, k - 1)
            h[k : k + 2, c0:] = g @ h[k : k + 2, c0:]
            r1 = min(k + 3, hi + 1)
            h[:r1, k : k + 2] = h[:r1, k : k + 2] @ ctranspose(g)
            z[:, k : k + 2] = z[:, k : k + 2] @ ctranspose(g)
            if k > lo:
                h[k + 1, k - 1] = 0.0
    t = np.triu(h)
    return SchurForm(z, t)


def eigenvalues(m, **kw) -> np.ndarray:
    return schur_decompose(m, **kw).eigenvalues


# -- eigenvectors -----------------------------------------------------------


def _triangular_eigvecs(t: np.ndarray) -> np.ndarray:
    """Right eigenvectors of upper-triangular t by back substitution.

    Column j solves (t - t_jj I) x = 0 with x_j = 1, x_i = 0 for i > j. Tiny
    pivots are replaced by eps*||t||_F, so coalescing eigenvalues yield nearly
    parallel columns rather than division by zero.
    """
    n = t.shape[0]
    smin = max(EPS * frobenius_norm(t), np.finfo(float).tiny)
    x = np.zeros((n, n), dtype=complex)
    for j in range(n):
        x[j, j] = 1.0
        lam = t[j, j]
        for i in range(j - 1, -1, -1):
            rhs = -(t[i, i + 1 : j + 1] @ x[i + 1 : j + 1, j])
            piv = t[i, i] - lam
            if abs(piv) < smin:
                piv = smin
            x[i, j] = rhs / piv
        x[:, j] /= np.linalg.norm(x[:, j])
    return x


def _clusters(values: np.ndarray, tol: float) -> list[list[int]]:
    """Single-linkage grouping of eigenvalues closer than tol."""
    n = len(values)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(values[i] - values[j]) <= tol:
                parent[find(j)] = find(i)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values(), key=lambda g: g[0])


def eigenpairs(m, cluster_tol: float | None = None, rank_tol: float = RANK_TOL, schur: SchurForm | None = None) -> list[EigenPair]:
    """Eigenvalues with unit right eigenvectors, flagging Jordan chains.

    Eigenvalues within ``cluster_tol`` (default ``1e-8 * ||m||_F``) form a
    cluster. A cluster of size k whose eigenvectors span only r < k
    dimensions (singular values below ``rank_tol``) is reported as r pairs;
    the first carries ``chain_length = k - r + 1``, the rest length 1.
    """
    a = as_matrix(m)
    if schur is None:
        schur = schur_decompose(a)
    if cluster_tol is None:
        cluster_tol = CLUSTER_RTOL * frobenius_norm(a)
    vals = schur.eigenvalues
    vecs = schur.q @ _triangular_eigvecs(schur.t)
    vecs /= np.linalg.norm(vecs, axis=0)
    pairs = []
    for group in _clusters(vals, cluster_tol):
        if len(group) == 1:
            i = group[0]
            pairs.append(EigenPair(complex(vals[i]), vecs[:, i].copy(), 1))
            continue
        block = vecs[:, group]
        u, sv, _ = np.linalg.svd(block, full_matrices=False)
        rank = max(1, int(np.sum(sv >= rank_tol)))
        k = len(group)
        if rank == k:
            for i in group:
                pairs.append(EigenPair(complex(vals[i]), vecs[:, i].copy(), 1))
            continue
        centre = complex(np.mean(vals[group]))
        # head of the chain: the exact eigenvector of the leading Schur position
        head = vecs[:, group[0]].copy()
        pairs.append(EigenPair(centre, head, k - rank + 1))
        if rank > 1:
            basis = u[:, :rank]
            # complete the head to an orthonormal eigenspace basis
            rest = basis - np.outer(head, head.conj() @ basis)
            q, r = np.linalg.qr(rest)
            order = np.argsort(-np.abs(np.diag(r)))[: rank - 1]
            for c in order:
                w = q[:, c]
                pairs.append(EigenPair(centre, w / np.linalg.norm(w), 1))
    return pairs


# -- matrix functions -------------------------------------------------------


def matrix_power_int(m, n: int) -> np.ndarray:
    """m**n for integer n >= 0 by repeated squaring."""
    a = as_matrix(m)
    if n < 0:
        raise DomainError("negative powers are not supported")
    result = np.eye(a.shape[0], dtype=complex)
    base = a.copy()
    while n:
        if n & 1:
            result = result @ base
        n >>= 1
        if n:
            base = base @ base
    return result


def _taylor_exp(a: np.ndarray, terms: int) -> np.ndarray:
    n = a.shape[0]
    eye = np.eye(n, dtype=complex)
    result = eye.copy()
    for k in range(terms, 0, -1):
        result = eye + (a @ result) / k
    return result


def matrix_exponential(m, t: float = 1.0, terms: int = EXPM_TERMS, scale_target: float = EXPM_SCALE_TARGET) -> np.ndarray:
    """e^{m t} by scaling and squaring with a truncated Taylor series."""
    a = as_matrix(m) * t
    if not np.all(np.isfinite(a)):
        raise RangeError("m*t is not finite")
    nrm = frobenius_norm(a)
    s = 0
    if nrm > scale_target:
        s = int(math.ceil(math.log2(nrm / scale_target)))
    e = _taylor_exp(a / 2.0**s, terms)
    with np.errstate(over="ignore", invalid="ignore"):
        for _ in range(s):
            e = e @ e
    if not np.all(np.isfinite(e)):
        raise RangeError(f"matrix exponential overflows (||m t||_F = {nrm:.3g})")
    return e


def _principal_log(z: complex) -> complex:
    # +0.0 folds a negative-zero imaginary part onto the upper side of the cut
    z = complex(z.real, z.imag + 0.0)
    return cmath.log(z)


def _log_divided_difference(l1: complex, l2: complex, log1: complex, log2: complex) -> complex:
    """(log2 - log1) / (l2 - l1) with a series branch for close arguments."""
    u = (l2 - l1) / l1
    if abs(u) < 1e-3 and abs((log2 - log1) - cmath.log(1 + u)) < 1e-6:
        # log1p(u)/u = 1 - u/2 + u^2/3 - ...
        acc = 0j
        for k in range(12, 0, -1):
            acc = 1 / k - u * acc
        return acc / l1
    return (log2 - log1) / (l2 - l1)


def log_branch_pair(l1: complex, l2: complex) -> tuple[complex, complex]:
    """Logs of two eigenvalues with Im(log l1 - log l2) in [-pi, pi).

    log l1 is principal; log l2 is shifted by a multiple of 2*pi*i.
    """
    log1 = _principal_log(l1)
    log2 = _principal_log(l2)
    diff = (log1 - log2).imag
    k = math.floor((diff + math.pi) / (2 * math.pi))
    log2 = complex(log2.real, log2.imag + 2 * math.pi * k)
    return log1, log2


def _parlett(t: np.ndarray, fdiag: np.ndarray) -> np.ndarray:
    """Parlett recurrence for f(t), t upper triangular with distinct diagonal."""
    n = t.shape[0]
    f = np.diag(fdiag).astype(complex)
    for p in range(1, n):
        for i in range(n - p):
            j = i + p
            den = t[j, j] - t[i, i]
            s = t[i, j] * (f[j, j] - f[i, i])
            if p > 1:
                s += t[i, i + 1 : j] @ f[i + 1 : j, j] - f[i, i + 1 : j] @ t[i + 1 : j, j]
            f[i, j] = s / den
    return f


def matrix_log_principal(m, cluster_tol: float | None = None, singular_rtol: float = 1e-14) -> np.ndarray:
    """Matrix logarithm with e^{result} = m.

    2x2 input: either branch-paired logs of distinct eigenvalues (imaginary
    parts of their difference in [-pi, pi)) or the closed form
    [[ln l, b/l], [0, ln l]] on the triangular Schur factor when the
    eigenvalue is repeated. Larger input must be diagonalisable; principal
    logs are used, via Parlett on the Schur form when eigenvalues are
    distinct and via the eigenvector basis otherwise.
    """
    a = as_matrix(m)
    n = a.shape[0]
    scale = frobenius_norm(a)
    sf = schur_decompose(a)
    vals = sf.eigenvalues
    if n == 0:
        return a.copy()
    if np.min(np.abs(vals)) <= singular_rtol * max(scale, 1.0):
        raise DomainError("logarithm of a singular matrix")
    if cluster_tol is None:
        cluster_tol = CLUSTER_RTOL * scale
    q, t = sf.q, sf.t
    if n == 1:
        return np.array([[_principal_log(vals[0])]])
    if n == 2:
        l1, l2, b = complex(t[0, 0]), complex(t[1, 1]), complex(t[0, 1])
        if abs(l1 - l2) <= cluster_tol:
            lam = (l1 + l2) / 2
            log = _principal_log(lam)
            lt = np.array([[log, b / lam], [0, log]])
        else:
            log1, log2 = log_branch_pair(l1, l2)
            lt = np.array([[log1, b * _log_divided_difference(l1, l2, log1, log2)], [0, log2]])
        return q @ lt @ ctranspose(q)
    logs = np.array([_principal_log(v) for v in vals])
    groups = _clusters(vals, cluster_tol)
    if all(len(g) == 1 for g in groups):
        return q @ _parlett(t, logs) @ ctranspose(q)
    pairs = eigenpairs(a, cluster_tol=cluster_tol, schur=sf)
    if len(pairs) < n or any(p.chain_length > 1 for p in pairs):
        raise UnsupportedShapeError("logarithm of a defective matrix larger than 2x2")
    v = np.column_stack([p.vector for p in pairs])
    d = np.array([_principal_log(p.value) for p in pairs])
    return np.linalg.solve(v.T, (v * d).T).T
