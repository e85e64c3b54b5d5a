"""
axipot/numerics/bipolar.py

Bipolar coordinates (tau, theta) with poles A = (-alpha, 0) and B = (alpha, 0).

The chart is the conformal map z = alpha*coth((tau - i*theta)/2), z = x + i*y, which gives
x = alpha*sh(tau)/(ch(tau) - cos(theta)) and y = alpha*sin(theta)/(ch(tau) - cos(theta)).
Level lines tau = const are circles of center (alpha*coth(tau), 0) and radius alpha/sh(tau).

Contains:
- from_bipolar(), to_bipolar(): single-point conversions on the pydantic models
- bipolar_to_cartesian(), cartesian_to_bipolar(): array conversions
- bipolar_gradient_to_cartesian(): chain rule for (d/dtau, d/dtheta) -> (d/dx, d/dy)
- disk_geometry(), level_circle(), annulus_geometry()
"""

import math

import numpy as np

from axipot.data_models.geometry import AnnulusGeometry, BipolarPoint, CartesianPoint, DiskGeometry
from axipot.utils.exceptions import DomainError, GeometryError

TWO_PI = 2.0 * math.pi


def bipolar_to_cartesian(
    tau: np.ndarray | float,
    theta: np.ndarray | float,
    alpha: float,
) -> tuple[np.ndarray, np.ndarray]:
    """
    Cartesian coordinates of bipolar points (broadcasting).
    Returns:
        tuple[np.ndarray, np.ndarray]: (x, y).
    """
    tau = np.asarray(tau, dtype=float)
    theta = np.asarray(theta, dtype=float)
    denominator = np.cosh(tau) - np.cos(theta)
    return alpha * np.sinh(tau) / denominator, alpha * np.sin(theta) / denominator


def cartesian_to_bipolar(
    x: np.ndarray | float,
    y: np.ndarray | float,
    alpha: float,
) -> tuple[np.ndarray, np.ndarray]:
    """
    Bipolar coordinates of Cartesian points (broadcasting).
    tau = ln(|z + alpha| / |z - alpha|), theta = -Arg((z + alpha)/(z - alpha)) mod 2*pi.
    Returns:
        tuple[np.ndarray, np.ndarray]: (tau, theta) with theta in [0, 2*pi).
    """
    z = np.asarray(x, dtype=float) + 1j * np.asarray(y, dtype=float)
    tau = np.log(np.abs(z + alpha) / np.abs(z - alpha))
    theta = np.mod(-np.angle((z + alpha) / (z - alpha)), TWO_PI)
    # mod can return 2*pi itself for tiny negative inputs
    theta = np.where(theta >= TWO_PI, 0.0, theta)
    return tau, theta


def bipolar_gradient_to_cartesian(
    u_tau: np.ndarray,
    u_theta: np.ndarray,
    tau: np.ndarray,
    theta: np.ndarray,
    alpha: float,
) -> tuple[np.ndarray, np.ndarray]:
    """
    Convert bipolar partial derivatives to Cartesian ones.
    With A = 1 - ch(tau)cos(theta) and B = sh(tau)sin(theta):
    u_x = (A*u_tau - B*u_theta)/alpha and u_y = -(B*u_tau + A*u_theta)/alpha.
    """
    a = 1.0 - np.cosh(tau) * np.cos(theta)
    b = np.sinh(tau) * np.sin(theta)
    return (a * u_tau - b * u_theta) / alpha, -(b * u_tau + a * u_theta) / alpha


def from_bipolar(p: BipolarPoint) -> CartesianPoint:
    """
    Cartesian point of a bipolar point.
    Args:
        p (BipolarPoint): Point with tau > 0.
    Returns:
        CartesianPoint: (x, y).
    Raises:
        DomainError: tau <= 0.
    """
    if not p.tau > 0.0:
        raise DomainError(f"from_bipolar needs tau > 0, got {p.tau}")
    x, y = bipolar_to_cartesian(p.tau, p.theta, p.alpha)
    return CartesianPoint(x=float(x), y=float(y))


def to_bipolar(q: CartesianPoint, alpha: float) -> BipolarPoint:
    """
    Bipolar coordinates of a point of the right half-plane.
    Args:
        q (CartesianPoint): Point with x > 0.
        alpha (float): Pole abscissa, > 0.
    Returns:
        BipolarPoint: (tau, theta, alpha).
    Raises:
        DomainError: q.x <= 0 or alpha <= 0.
        GeometryError: q is the pole B, where tau is infinite.
    """
    if not alpha > 0.0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    if not q.x > 0.0:
        raise DomainError(f"point ({q.x}, {q.y}) is not in the right half-plane")
    if q.x == alpha and q.y == 0.0:
        raise GeometryError("the pole (alpha, 0) has tau = +inf")
    tau, theta = cartesian_to_bipolar(q.x, q.y, alpha)
    return BipolarPoint(tau=float(tau), theta=float(theta), alpha=alpha)


def level_circle(tau0: float, alpha: float) -> tuple[float, float]:
    """
    Center abscissa and radius of the level circle tau = tau0.
    Raises:
        DomainError: tau0 <= 0 or alpha <= 0.
    """
    if not tau0 > 0.0:
        raise DomainError(f"level circles need tau0 > 0, got {tau0}")
    if not alpha > 0.0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    return alpha / math.tanh(tau0), alpha / math.sinh(tau0)


def disk_geometry(a: float, R: float) -> DiskGeometry:
    """
    Bipolar description of the disk of center (a, 0) and radius R.
    Args:
        a (float): Center abscissa.
        R (float): Radius, 0 < R < a.
    Returns:
        DiskGeometry: alpha = sqrt(a^2 - R^2), tau0 = arccosh(a/R).
    Raises:
        DomainError: not a > R > 0.
    """
    if not (R > 0.0 and a > R):
        raise DomainError(f"disk needs a > R > 0, got a={a}, R={R}")
    alpha = math.sqrt((a - R) * (a + R))
    # arcsinh(alpha/R) equals arccosh(a/R) and stays accurate as a -> R
    tau0 = math.asinh(alpha / R)
    return DiskGeometry(center_a=a, radius_R=R, alpha=alpha, tau0=tau0)


def annulus_geometry(tau0: float, tau1: float, alpha: float) -> AnnulusGeometry:
    """
    Level circles of the annulus tau0 < tau < tau1.
    Raises:
        DomainError: not 0 < tau0 < tau1.
    """
    if not 0.0 < tau0 < tau1:
        raise DomainError(f"annulus needs 0 < tau0 < tau1, got {tau0}, {tau1}")
    outer_center, outer_radius = level_circle(tau0, alpha)
    inner_center, inner_radius = level_circle(tau1, alpha)
    return AnnulusGeometry(
        tau0=tau0,
        tau1=tau1,
        alpha=alpha,
        outer_center=outer_center,
        outer_radius=outer_radius,
        inner_center=inner_center,
        inner_radius=inner_radius,
    )
