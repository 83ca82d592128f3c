"""Transient growth of e^{Mt} and M^n certified from invariant subspaces."""
from .config import AnalysisConfig
from .errors import ConvergenceError, DomainError, InvarianceError, RangeError, UnsupportedShapeError
from .linalg import (
    EigenPair,
    SchurForm,
    eigenpairs,
    frobenius_norm,
    matrix_exponential,
    matrix_log_principal,
    matrix_power_int,
    schur_decompose,
    spectral_norm,
    vector_angle,
)
from .numrange import (
    DiskNR,
    EllipseNR,
    ellipse_2x2,
    jordan_block,
    jordan_disk,
    matrix_from_angle,
    nr_boundary_sample,
    numerical_abscissa,
    omega_A,
    omega_logD,
)
from .oracle import (
    SweepCurve,
    derivative_at_zero,
    rayleigh_samples,
    sweep_exp,
    sweep_pow,
    sweep_pow_continuous,
)
from .transient import (
    Kind,
    MatrixReport,
    Mode,
    SubspaceCertificate,
    antieigen_angle,
    check_jordan,
    check_offdiagonal,
    check_pair,
    restrict,
    scan,
    threshold_theta_exp,
    threshold_theta_pow,
)

__version__ = "0.1.0"
