"""
axipot/utils/exceptions.py

Custom exceptions for axipot.

Contains:
- AxipotError: Base exception
- AxipotInputError and subclasses: invalid parameters, points or geometry (CLI exit 1)
- AxipotNumericalError and subclasses: quadrature or solver breakdown (CLI exit 2)
- ConvergenceWarning: series truncation advisories
"""


class AxipotError(Exception):
    """
    Base exception for all axipot errors.
    """


class AxipotInputError(AxipotError):
    """
    Raised when inputs are outside the domain an operation is defined on.
    """


class AxipotNumericalError(AxipotError):
    """
    Raised when a numerical procedure fails on valid inputs.
    """


class DomainError(AxipotInputError):
    """
    Exception raised when an argument lies outside the function's domain.
    """


class PoleError(AxipotInputError):
    """
    Exception raised when a Gamma function argument hits a pole.
    """


class LegendreParameterError(AxipotInputError):
    """
    Exception raised when no Legendre representation or recursion covers the (degree, order) pair.
    """


class StepError(AxipotInputError):
    """
    Exception raised when a finite-difference stencil would leave the right half-plane.
    """


class GeometryError(AxipotInputError):
    """
    Exception raised for invalid geometry: a pole point, or a circle leaving the half-plane.
    """


class ResolutionError(AxipotInputError):
    """
    Exception raised when a boundary trace has too few samples for the requested modes.
    """


class SingularKernelError(AxipotInputError):
    """
    Exception raised when a kernel is evaluated too close to its singularity.
    Carries the leading singular term as advisory data.
    """

    def __init__(self, message: str, leading_term: complex) -> None:
        super().__init__(message)
        self.leading_term = leading_term


class QuadratureError(AxipotNumericalError):
    """
    Exception raised when an integral fails to converge.
    Carries the best estimate and the error achieved before giving up.
    """

    def __init__(self, message: str, best_estimate: complex, achieved_error: float) -> None:
        super().__init__(f"{message} (best estimate {best_estimate}, achieved error {achieved_error:.3e})")
        self.best_estimate = best_estimate
        self.achieved_error = achieved_error


class SingularModeError(AxipotNumericalError):
    """
    Exception raised when a per-mode annulus system is numerically singular.
    """

    def __init__(self, n: int, det: complex) -> None:
        super().__init__(f"annulus mode n={n} has |det|={abs(det):.3e}")
        self.n = n
        self.det = det


class ConvergenceWarning(UserWarning):
    """
    Warning issued when a truncated series may not have converged at the requested point.
    """
