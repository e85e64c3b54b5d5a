"""
axipot/potentials/weinstein.py

The Weinstein operator L_m u = Δu + (m/x) u_x and its adjoint L_m* u = Δu - (m/x) u_x + (m/x^2) u,
evaluated by five-point finite differences, with the operator identities used as oracles.

Contains:
- apply_Lm(), apply_Lm_star(): single-point residuals
- lm_residuals(), lm_star_residuals(): the same over coordinate arrays
- conjugation_residuals(): S_m L_m* - L_m S_m and L_{-m}* D - D L_m
- weinstein_principle_residual(): L_m u - x^(1-m) L_{2-m}(x^(m-1) u)
- reference_solution(), random_smooth_field(), derivative_scale()
- mean_value_residual(): the half-circle mean-value formula for integer m
"""

import math

import numpy as np

from axipot.config import Config
from axipot.data_models.geometry import CartesianPoint
from axipot.data_models.weinstein import (
    AngleConvention,
    ReferenceKind,
    ReferenceSolution,
    ScalarField,
    SmoothField,
)
from axipot.numerics.complexcore import cpow_posbase, integrate
from axipot.utils.exceptions import DomainError, StepError
from axipot.utils.logger import get_logger

logger = get_logger(name=__name__)


# Private functions _______________________________________________________________________________

def _check_step(x: np.ndarray | float, h: float, reach: int = 1) -> None:
    """Raise StepError when a stencil of half-width reach*h would cross x = 0."""
    if not h > 0.0:
        raise StepError(f"finite-difference step must be positive, got {h}")
    if not np.all(np.asarray(x) > reach * h):
        raise StepError(f"stencil of width {reach}*h = {reach * h:g} leaves the right half-plane")


def _stencil(
    f: ScalarField,
    x: np.ndarray,
    y: np.ndarray,
    h: float,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    (f, f_x, Δf) by central differences. The five stencil points go to f in one call,
    so quadrature-backed fields see a single shared discretization.
    """
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    xs = np.stack((x, x + h, x - h, x, x))
    ys = np.stack((y, y, y, y + h, y - h))
    center, east, west, north, south = np.asarray(f(xs, ys), dtype=complex)
    f_x = (east - west) / (2.0 * h)
    laplacian = (east + west + north + south - 4.0 * center) / (h * h)
    return center, f_x, laplacian


def _central_x(f: ScalarField, x: np.ndarray, y: np.ndarray, h: float) -> np.ndarray:
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    east, west = np.asarray(f(np.stack((x + h, x - h)), np.stack((y, y))), dtype=complex)
    return (east - west) / (2.0 * h)


def _lm(f: ScalarField, m: complex, x: np.ndarray, y: np.ndarray, h: float) -> np.ndarray:
    _, f_x, laplacian = _stencil(f, x, y, h)
    return laplacian + m / x * f_x


def _lm_star(f: ScalarField, m: complex, x: np.ndarray, y: np.ndarray, h: float) -> np.ndarray:
    center, f_x, laplacian = _stencil(f, x, y, h)
    return laplacian - m / x * f_x + m / (x * x) * center


def _point_arrays(p: CartesianPoint) -> tuple[np.ndarray, np.ndarray]:
    return np.asarray(p.x, dtype=float), np.asarray(p.y, dtype=float)


# Exports _________________________________________________________________________________________

def lm_residuals(
    f: ScalarField,
    m: complex,
    x: np.ndarray,
    y: np.ndarray,
    h: float | None = None,
) -> np.ndarray:
    """
    L_m f at every (x, y) by the five-point stencil.
    Raises:
        StepError: some x <= h.
    """
    h = Config.FD_STEP if h is None else h
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    _check_step(x, h)
    return _lm(f, complex(m), x, y, h)


def lm_star_residuals(
    f: ScalarField,
    m: complex,
    x: np.ndarray,
    y: np.ndarray,
    h: float | None = None,
) -> np.ndarray:
    """L_m* f at every (x, y) by the five-point stencil."""
    h = Config.FD_STEP if h is None else h
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    _check_step(x, h)
    return _lm_star(f, complex(m), x, y, h)


def apply_Lm(f: ScalarField, m: complex, p: CartesianPoint, h: float | None = None) -> complex:
    """
    Second-order finite-difference value of Δf + (m/x) f_x at p.
    Args:
        f (ScalarField): Field, smooth near p.
        m (complex): Operator parameter.
        p (CartesianPoint): Point with p.x > h.
        h (float | None): Step; Config.FD_STEP by default.
    Returns:
        complex: L_m f(p).
    Raises:
        StepError: p.x <= h.
    """
    x, y = _point_arrays(p)
    return complex(lm_residuals(f, m, x, y, h))


def apply_Lm_star(f: ScalarField, m: complex, p: CartesianPoint, h: float | None = None) -> complex:
    """Finite-difference value of the adjoint Δf - (m/x) f_x + (m/x^2) f at p."""
    x, y = _point_arrays(p)
    return complex(lm_star_residuals(f, m, x, y, h))


def conjugation_residuals(
    f: ScalarField,
    m: complex,
    p: CartesianPoint,
    h: float | None = None,
) -> tuple[complex, complex]:
    """
    r1 = (S_m L_m* - L_m S_m) f and r2 = (L_{-m}* D - D L_m) f at p,
    with S_m f = x^(-m) f and D f = f_x. Both sides nest two stencils.
    Args:
        h (float | None): Step; Config.NESTED_FD_STEP by default.
    Raises:
        StepError: p.x <= 2h.
    """
    h = Config.NESTED_FD_STEP if h is None else h
    m = complex(m)
    x, y = _point_arrays(p)
    _check_step(x, h, reach=2)

    def scaled(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        return cpow_posbase(xs, -m) * f(xs, ys)

    def derivative(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        return _central_x(f, xs, ys, h)

    def lm_of_f(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        return _lm(f, m, xs, ys, h)

    r1 = cpow_posbase(x, -m) * _lm_star(f, m, x, y, h) - _lm(scaled, m, x, y, h)
    d_lm = _central_x(lm_of_f, x, y, h)
    r2 = _lm_star(derivative, -m, x, y, h) - d_lm
    return complex(r1), complex(r2)


def weinstein_principle_residual(
    f: ScalarField,
    m: complex,
    p: CartesianPoint,
    h: float | None = None,
) -> float:
    """|L_m f - x^(1-m) L_{2-m}(x^(m-1) f)| at p by finite differences."""
    h = Config.FD_STEP if h is None else h
    m = complex(m)
    x, y = _point_arrays(p)
    _check_step(x, h)

    def lifted(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        return cpow_posbase(xs, m - 1.0) * f(xs, ys)

    lhs = _lm(f, m, x, y, h)
    rhs = cpow_posbase(x, 1.0 - m) * _lm(lifted, 2.0 - m, x, y, h)
    return float(abs(lhs - rhs))


def derivative_scale(f: ScalarField, p: CartesianPoint, h: float | None = None) -> float:
    """max(|f_xx|, |f_yy|, |f_x|/x) at p, the size against which FD residuals are judged."""
    h = Config.FD_STEP if h is None else h
    x, y = _point_arrays(p)
    xs = np.stack((x, x + h, x - h, x, x))
    ys = np.stack((y, y, y, y + h, y - h))
    center, east, west, north, south = np.asarray(f(xs, ys), dtype=complex)
    f_xx = (east - 2.0 * center + west) / (h * h)
    f_yy = (north - 2.0 * center + south) / (h * h)
    f_x = (east - west) / (2.0 * h)
    return float(max(abs(f_xx), abs(f_yy), abs(f_x) / x))


def reference_solution(kind: ReferenceKind | str, m: complex) -> ReferenceSolution:
    """
    A manufactured solution of L_m u = 0: 1, y, x^2 - (m+1) y^2 or x^(1-m).
    The power solution vanishes on the axis only when Re m < 1.
    """
    return ReferenceSolution(kind=ReferenceKind(kind), m=complex(m))


def random_smooth_field(rng: np.random.Generator) -> SmoothField:
    """A random polynomial/trigonometric field with O(1) coefficients."""
    coefficients = [complex(*rng.uniform(-1.0, 1.0, size=2)) for _ in range(5)]
    return SmoothField(
        coefficients=coefficients,
        k=float(rng.uniform(0.2, 1.0)),
        w=(float(rng.uniform(-1.5, 1.5)), float(rng.uniform(-1.5, 1.5))),
    )


def mean_value_residual(
    m: int,
    u: ScalarField,
    r: float,
    convention: AngleConvention = AngleConvention.FROM_Y_AXIS,
) -> float:
    """
    |u(0,0) ∫ sin^m t dt - ∫ u(point(t)) sin^m t dt| over t in (-pi/2, pi/2).
    Args:
        m (int): Positive integer parameter.
        u (ScalarField): Solution of L_m u = 0 continuous up to the closed disk.
        r (float): Radius, > 0.
        convention (AngleConvention): point(t) = (r sin t, r cos t) from the y-axis (default),
            (r cos t, r sin t) from the x-axis, or axial: (r sin t, r cos t) for t in (0, pi),
            the half-circle in the closed right half-plane.
    Returns:
        float: The residual.
    Raises:
        DomainError: m not a positive integer, or r <= 0.
    """
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise DomainError(f"the mean-value formula needs a positive integer m, got {m}")
    if not r > 0.0:
        raise DomainError(f"radius must be positive, got {r}")
    m = int(m)
    if convention is AngleConvention.AXIAL:
        lower, upper = 0.0, math.pi
    else:
        lower, upper = -math.pi / 2.0, math.pi / 2.0

    def point(t: float) -> tuple[float, float]:
        if convention is AngleConvention.FROM_X_AXIS:
            return r * math.cos(t), r * math.sin(t)
        return r * math.sin(t), r * math.cos(t)

    def weighted(t: float) -> complex:
        px, py = point(t)
        return complex(u(np.asarray(px), np.asarray(py))) * math.sin(t) ** m

    weight = integrate(lambda t: math.sin(t) ** m, lower, upper)
    lhs = complex(u(np.asarray(0.0), np.asarray(0.0))) * weight
    rhs = integrate(weighted, lower, upper)
    logger.debug("mean value (m=%d, r=%g, %s): lhs=%s rhs=%s", m, r, convention, lhs, rhs)
    return abs(lhs - rhs)
