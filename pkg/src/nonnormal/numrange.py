"""Numerical-range geometry: 2x2 ellipses, Jordan-block disks, sampled boundaries."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .linalg import as_matrix, ctranspose, frobenius_norm, hermitian_eigh, hermitian_part


@dataclass(frozen=True)
class EllipseNR:
    """Elliptical numerical range of a 2x2 matrix.

    ``major_axis`` and ``minor_axis`` are full axis lengths of the region in
    the complex plane, so (major/2)**2 - (minor/2)**2 equals the squared
    centre-to-focus distance. ``shape_s`` is the quadratic form whose level
    set ``[x-cx, y-cy] S [x-cx, y-cy]^T = det(S)/4`` is the boundary.
    """

    center: complex
    foci: tuple[complex, complex]
    major_axis: float
    minor_axis: float
    shape_s: np.ndarray

    @property
    def axis_ratio(self) -> float:
        """minor/major; tends to 1 as the 2x2 matrix approaches a Jordan block."""
        if self.major_axis == 0.0:
            return 1.0
        return self.minor_axis / self.major_axis

    @property
    def omega(self) -> float:
        """Largest real part on the ellipse."""
        a, b = self.major_axis / 2, self.minor_axis / 2
        d = self.foci[0] - self.foci[1]
        alpha = cmath.phase(d) if d != 0 else 0.0
        return self.center.real + math.hypot(a * math.cos(alpha), b * math.sin(alpha))

    def boundary(self, k: int) -> np.ndarray:
        """k boundary points at uniformly spaced eccentric anomalies."""
        a, b = self.major_axis / 2, self.minor_axis / 2
        d = self.foci[0] - self.foci[1]
        rot = d / abs(d) if d != 0 else 1.0
        s = np.linspace(0.0, 2 * np.pi, k, endpoint=False)
        return self.center + rot * (a * np.cos(s) + 1j * b * np.sin(s))

    def outside_distance(self, z) -> np.ndarray:
        """Sum of focal distances minus the major axis; <= 0 inside the closed region."""
        z = np.asarray(z)
        f1, f2 = self.foci
        return np.abs(z - f1) + np.abs(z - f2) - self.major_axis

    def quadratic_form(self, z) -> np.ndarray:
        """Evaluate the shape form at points z (equals det(S)/4 on the boundary)."""
        z = np.asarray(z) - self.center
        x, y = z.real, z.imag
        s = self.shape_s
        return s[0, 0] * x * x + 2 * s[0, 1] * x * y + s[1, 1] * y * y


@dataclass(frozen=True)
class DiskNR:
    center: complex
    radius: float

    @property
    def omega(self) -> float:
        return self.center.real + self.radius


def _centred(m: np.ndarray):
    half_trace = (m[0, 0] + m[1, 1]) / 2
    m0 = m - half_trace * np.eye(2)
    det0 = m0[0, 0] * m0[1, 1] - m0[0, 1] * m0[1, 0]
    return complex(half_trace), m0, complex(det0)


def _departure_sq(m0: np.ndarray, det0: complex) -> float:
    """||M0||_F^2 - 2|det M0| without cancellation.

    This is |a|^2 for the Schur form [[mu, a], [0, -mu]] of M0. The commutator
    satisfies ||M0 M0^H - M0^H M0||_F^2 = 2|a|^4 + 8|mu|^2 |a|^2, solved here
    for |a|^2 in the form that never subtracts nearly equal numbers.
    """
    c = m0 @ ctranspose(m0) - ctranspose(m0) @ m0
    c2 = frobenius_norm(c) ** 2
    mu2 = abs(det0)
    if c2 == 0.0:
        return 0.0
    return 2 * c2 / (8 * mu2 + math.sqrt(64 * mu2 * mu2 + 8 * c2))


def shape_matrix(m) -> np.ndarray:
    a = as_matrix(m)
    if a.shape != (2, 2):
        raise DomainError("shape matrix is defined for 2x2 input")
    _, m0, det0 = _centred(a)
    f2 = frobenius_norm(m0) ** 2
    return np.array(
        [[f2 + 2 * det0.real, 2 * det0.imag], [2 * det0.imag, f2 - 2 * det0.real]]
    )


def uhlig_axes(m) -> tuple[float, float]:
    """The pair 2*sqrt(||M0||_F^2 +/- 2|det M0|), M0 = m - tr(m)/2 I.

    These are twice the geometric full axis lengths reported by
    :func:`ellipse_2x2`.
    """
    a = as_matrix(m)
    if a.shape != (2, 2):
        raise DomainError("axis formula is defined for 2x2 input")
    _, m0, det0 = _centred(a)
    f2 = frobenius_norm(m0) ** 2
    return 2 * math.sqrt(f2 + 2 * abs(det0)), 2 * math.sqrt(_departure_sq(m0, det0))


def axes_parametrized(lambda1: complex, lambda2: complex, theta: float) -> tuple[float, float]:
    """(2|l1-l2| csc theta, 2|l1-l2| cot theta) for the eigenvector-angle parametrisation."""
    d = abs(lambda1 - lambda2)
    return 2 * d / math.sin(theta), 2 * d * math.cos(theta) / math.sin(theta)


def matrix_from_angle(lambda1: complex, lambda2: complex, theta: float, phi: float = 0.0) -> np.ndarray:
    """Upper-triangular 2x2 matrix with eigenvalues l1, l2 and eigenvector angle theta.

    The off-diagonal entry is e^{i phi} |l2 - l1| cot(theta).
    """
    if not 0.0 < theta <= math.pi / 2:
        raise DomainError("theta must lie in (0, pi/2]")
    a = cmath.exp(1j * phi) * abs(lambda2 - lambda1) * math.cos(theta) / math.sin(theta)
    return np.array([[lambda1, a], [0.0, lambda2]], dtype=complex)


def jordan_block(lam: complex, size: int) -> np.ndarray:
    return lam * np.eye(size, dtype=complex) + np.eye(size, k=1, dtype=complex)


def ellipse_2x2(m) -> EllipseNR:
    a = as_matrix(m)
    if a.shape != (2, 2):
        raise DomainError("ellipse_2x2 needs a 2x2 matrix")
    center, m0, det0 = _centred(a)
    f2 = frobenius_norm(m0) ** 2
    root = cmath.sqrt(-det0)
    major = math.sqrt(f2 + 2 * abs(det0))
    minor = math.sqrt(_departure_sq(m0, det0))
    return EllipseNR(center, (center + root, center - root), major, minor, shape_matrix(a))


def numerical_abscissa(m) -> float:
    """max Re W(m): the top eigenvalue of the Hermitian part."""
    w, _ = hermitian_eigh(hermitian_part(m))
    return float(w[-1])


def omega_A(lambda1: complex, lambda2: complex, theta: float) -> float:
    """Closed-form numerical abscissa of the 2x2 matrix with eigenvector angle theta."""
    if not 0.0 < theta <= math.pi / 2:
        raise DomainError("theta must lie in (0, pi/2]")
    if lambda1 == lambda2:
        raise DomainError("omega_A needs distinct eigenvalues")
    d = lambda1 - lambda2
    cot = math.cos(theta) / math.sin(theta)
    radicand = abs(d) ** 2 * (1 + 2 * cot * cot) + (d * d).real
    return math.sqrt(max(radicand, 0.0)) / (2 * math.sqrt(2)) + (lambda1 + lambda2).real / 2


def jordan_disk(lam: complex, size: int) -> DiskNR:
    if size < 2:
        raise DomainError("Jordan disk needs block size >= 2")
    return DiskNR(complex(lam), math.cos(math.pi / (size + 1)))


def omega_logD(lam: complex) -> float:
    """ln|l| + 1/(2|l|): numerical abscissa of the log of a 2x2 Jordan block."""
    r = abs(lam)
    if not 0.0 < r < 1.0:
        raise DomainError("omega_logD needs 0 < |lambda| < 1")
    return math.log(r) + 1 / (2 * r)


def nr_boundary_sample(m, k: int) -> np.ndarray:
    """k support points of W(m), one per direction e^{i phi}, phi = 2 pi j / k.

    Each point is x^H m x for a top eigenvector x of the Hermitian part of
    e^{-i phi} m.
    """
    a = as_matrix(m)
    if k < 3:
        raise DomainError("need at least 3 boundary points")
    ah = ctranspose(a)
    out = np.empty(k, dtype=complex)
    for j in range(k):
        rot = cmath.exp(-2j * math.pi * j / k)
        h = (rot * a + rot.conjugate() * ah) / 2
        _, v = hermitian_eigh(h)
        x = v[:, -1]
        out[j] = np.vdot(x, a @ x)
    return out
