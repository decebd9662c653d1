"""Exception types shared across the package."""


class HardyWeightError(Exception):
    """Base class for all package-specific errors."""


class DomainError(HardyWeightError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class BranchCutError(DomainError):
    """Evaluation was requested on (or too close to) the branch cut [-1, 1]."""


class QuadratureConvergenceError(HardyWeightError, ArithmeticError):
    """Adaptive quadrature failed to reach the requested tolerance.

    Carries the best available estimate so callers can decide whether the
    achieved accuracy is still usable.
    """

    def __init__(self, message, value=None, error_estimate=None):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate
