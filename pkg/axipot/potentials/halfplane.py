"""
axipot/potentials/halfplane.py

Dirichlet problem on the right half-plane for Re m < 1:
    U(x, y) = C_m x^(1-m) ∫ u(eta) (x^2 + (y-eta)^2)^(m/2-1) deta,
    C_m = Γ(1-m/2)^2 / (2^m pi Γ(1-m)).
U solves L_m U = 0 and tends to u(y0) at (0, y0).

Contains:
- poisson_constant(), poisson_constant_by_quadrature(): C_m two ways
- poisson_field(): U over coordinate arrays
- poisson_solve(): U at one point
- boundary_data(): named data for the command line
"""

import math

import numpy as np

from axipot.data_models.geometry import CartesianPoint
from axipot.data_models.halfplane import BoundaryData, BoundaryDataKind, NamedBoundaryData
from axipot.data_models.quadrature import QuadratureConfig
from axipot.numerics.complexcore import gamma, geometric_breakpoints, integrate, integrate_vectorized
from axipot.utils.exceptions import DomainError
from axipot.utils.logger import get_logger

logger = get_logger(name=__name__)

QUARTER_PI = 0.25 * math.pi


# Private functions _______________________________________________________________________________

def _check_parameter(m: complex) -> complex:
    m = complex(m)
    if not m.real < 1.0:
        raise DomainError(f"the half-plane Dirichlet problem needs Re m < 1, got m = {m}")
    return m


# Exports _________________________________________________________________________________________

def poisson_constant(m: complex) -> complex:
    """
    C_m = Γ(1-m/2)^2 / (2^m pi Γ(1-m)); C_0 = 1/pi, C_{-1} = 1/2.
    Raises:
        DomainError: Re m >= 1.
    """
    m = _check_parameter(m)
    return gamma(1.0 - 0.5 * m) ** 2 / (2.0 ** m * math.pi * gamma(1.0 - m))


def poisson_constant_by_quadrature(m: complex, cfg: QuadratureConfig | None = None) -> complex:
    """C_m = (1-m)/(2pi) ∫_0^pi sin^(1-m) t dt."""
    m = _check_parameter(m)
    cfg = (cfg or QuadratureConfig()).singular()
    # sin^(1-m) is symmetric about pi/2
    half = integrate(lambda t: complex(np.exp((1.0 - m) * math.log(math.sin(t)))), 0.0, 0.5 * math.pi, cfg)
    return (1.0 - m) / (2.0 * math.pi) * 2.0 * half


def poisson_field(
    m: complex,
    data: BoundaryData,
    x: np.ndarray | float,
    y: np.ndarray | float,
    cfg: QuadratureConfig | None = None,
) -> np.ndarray:
    """
    U over broadcast coordinate arrays. With eta = y -+ t x,
    U = C_m [∫_0^1 (u(y-tx) + u(y+tx)) (1+t^2)^(m/2-1) dt
             + ∫_0^(pi/4) (u(y - x cot s) + u(y + x cot s)) sin^(-m) s ds],
    the second piece being t >= 1 under t = cot s; no truncation is involved.
    Args:
        m (complex): Parameter with Re m < 1.
        data (BoundaryData): Bounded continuous boundary values.
        x, y (np.ndarray | float): Points with x > 0.
        cfg (QuadratureConfig | None): Tolerances.
    Returns:
        np.ndarray: U with the broadcast shape.
    Raises:
        DomainError: Re m >= 1 or some x <= 0.
    """
    m = _check_parameter(m)
    cfg = cfg or QuadratureConfig()
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    if not np.all(x > 0.0):
        raise DomainError("the half-plane solution is defined for x > 0")
    x_n = x[..., None]
    y_n = y[..., None]

    def near(t: np.ndarray) -> np.ndarray:
        shift = x_n * t
        return (data(y_n - shift) + data(y_n + shift)) * np.exp((0.5 * m - 1.0) * np.log1p(t * t))

    def far(s: np.ndarray) -> np.ndarray:
        with np.errstate(over="ignore"):
            shift = x_n / np.tan(s)
            samples = data(y_n - shift) + data(y_n + shift)
        return samples * np.exp(-m * np.log(np.sin(s)))

    width = float(min(np.min(x), 1.0))
    # for large x the data sit in a layer of width 1/x at t = 0
    near_breaks = geometric_breakpoints(0.0, 1.0, 1.0 / float(np.max(x))) if np.max(x) > 1.0 else []
    near_part, near_error = integrate_vectorized(near, 0.0, 1.0, cfg, near_breaks)
    far_part, far_error = integrate_vectorized(far, 0.0, QUARTER_PI, cfg, geometric_breakpoints(0.0, QUARTER_PI, width))
    logger.debug("poisson field over %d points (errors %.1e, %.1e)", x.size, near_error, far_error)
    return poisson_constant(m) * (near_part + far_part)


def poisson_solve(
    m: complex,
    data: BoundaryData,
    p: CartesianPoint,
    cfg: QuadratureConfig | None = None,
) -> complex:
    """
    The bounded solution of L_m U = 0 on the half-plane with U -> data on the axis, at p.
    Raises:
        DomainError: Re m >= 1 or p outside the half-plane.
    """
    return complex(poisson_field(m, data, p.x, p.y, cfg))


def boundary_data(kind: BoundaryDataKind | str, amplitude: complex = 1.0) -> NamedBoundaryData:
    """Named data: gaussian exp(-eta^2), lorentzian 1/(1+eta^2), or constant."""
    return NamedBoundaryData(kind=BoundaryDataKind(kind), amplitude=amplitude)
