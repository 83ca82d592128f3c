"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies outside the hypotheses of the requested operation."""


class UnsupportedShapeError(DomainError):
    """Matrix structure the operation does not handle (e.g. defective N > 2 logarithm)."""


class InvarianceError(DomainError):
    """A basis does not span an invariant subspace within tolerance."""

    def __init__(self, message, defect):
        super().__init__(message)
        self.defect = defect


class ConvergenceError(ArithmeticError):
    """An iterative method hit its iteration cap."""


class RangeError(OverflowError):
    """Result would overflow double precision."""
