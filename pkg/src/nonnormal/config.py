from __future__ import annotations

from dataclasses import asdict, dataclass

from .errors import DomainError


@dataclass(frozen=True)
class AnalysisConfig:
    """Tolerances and sweep settings shared by the CLI commands.

    Relative tolerances are scaled by the norm of the analysed matrix:
    ``cluster_tol`` by ||M||_F, ``invariance_tol`` by ||M||_2.
    ``t_max``/``s_max`` of None select the 50/|slowest decay rate| horizon.
    """

    cluster_tol: float = 1e-8
    rank_tol: float = 1e-6
    invariance_tol: float = 1e-8
    oracle_threshold: float = 1e-9
    t_max: float | None = None
    s_max: float | None = None
    n_max: int = 200
    steps: int = 10_000
    boundary_points: int = 360
    derivative_h: float = 1e-6
    seed: int = 42

    def __post_init__(self):
        for name in ("cluster_tol", "rank_tol", "invariance_tol", "oracle_threshold", "derivative_h"):
            if not getattr(self, name) > 0:
                raise DomainError(f"{name} must be positive")
        for name in ("t_max", "s_max"):
            value = getattr(self, name)
            if value is not None and not value > 0:
                raise DomainError(f"{name} must be positive")
        if self.steps < 2:
            raise DomainError("steps must be at least 2")
        if self.n_max < 1:
            raise DomainError("n_max must be at least 1")
        if self.boundary_points < 3:
            raise DomainError("boundary_points must be at least 3")

    def to_dict(self) -> dict:
        return asdict(self)
