"""Seeded random matrix families for property tests and experiment scripts."""
from __future__ import annotations

import numpy as np

from .linalg import ctranspose
from .numrange import jordan_block


def complex_normal(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    q, r = np.linalg.qr(complex_normal(rng, (n, n)))
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_stable_eigenvalues(rng: np.random.Generator, n: int, rmin: float = 0.05, rmax: float = 0.95) -> np.ndarray:
    """Eigenvalues in the left half of the punctured unit disk, stable for both exp and powers."""
    r = rng.uniform(rmin, rmax, n)
    ang = rng.uniform(0.55 * np.pi, 1.45 * np.pi, n)
    return r * np.exp(1j * ang)


def random_nonnormal(rng: np.random.Generator, n: int, eigs=None, coupling: float = 1.0) -> np.ndarray:
    """Q T Q^H with T upper triangular: given diagonal, Gaussian strict upper part."""
    if eigs is None:
        eigs = random_stable_eigenvalues(rng, n)
    t = np.diag(np.asarray(eigs, dtype=complex)) + coupling * np.triu(complex_normal(rng, (n, n)), 1)
    q = random_unitary(rng, n)
    return q @ t @ ctranspose(q)


def random_normal_matrix(rng: np.random.Generator, n: int, eigs=None) -> np.ndarray:
    if eigs is None:
        eigs = random_stable_eigenvalues(rng, n)
    q = random_unitary(rng, n)
    return (q * np.asarray(eigs)) @ ctranspose(q)


def with_jordan_block(rng: np.random.Generator, lam: complex, size: int, others) -> np.ndarray:
    """Block upper-triangular matrix holding an exact Jordan block plus extra eigenvalues.

    No unitary mixing: a rotated Jordan block splits its eigenvalue at the
    eps**(1/size) level and stops being recognisable.
    """
    others = np.asarray(others, dtype=complex)
    n = size + len(others)
    m = np.zeros((n, n), dtype=complex)
    m[:size, :size] = jordan_block(lam, size)
    m[size:, size:] = np.diag(others)
    m[:size, size:] = 0.3 * complex_normal(rng, (size, len(others)))
    return m


def corpus(seed: int, count: int) -> list[np.ndarray]:
    """Mixed test corpus: non-normal diagonalisable, rotated 2x2 Jordan, exact Jordan blocks, normal."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        kind = i % 5
        if kind in (0, 1):
            n = int(rng.integers(2, 7))
            out.append(random_nonnormal(rng, n, coupling=float(rng.uniform(0.1, 2.0))))
        elif kind == 2:
            lam = random_stable_eigenvalues(rng, 1)[0]
            q = random_unitary(rng, 2)
            out.append(q @ jordan_block(lam, 2) @ ctranspose(q))
        elif kind == 3:
            size = int(rng.integers(2, 5))
            lam = random_stable_eigenvalues(rng, 1)[0]
            others = random_stable_eigenvalues(rng, int(rng.integers(0, 3)))
            out.append(with_jordan_block(rng, lam, size, others))
        else:
            out.append(random_normal_matrix(rng, int(rng.integers(2, 6))))
    return out
