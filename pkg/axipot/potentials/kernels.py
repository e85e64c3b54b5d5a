"""
axipot/potentials/kernels.py

Fundamental solutions E_m of the Weinstein operator and the reflected kernels F_m,
their behavior at coincidence, and the Green representation over a circle.

With B(t) = (x-xi)^2 + (y-eta)^2 + 4 x xi sin^2(t/2):
    Re m >= 1:  E_m = -(xi^m / 2pi)          ∫_0^pi sin^(m-1) t  B^(-m/2)     dt
    Re m <  1:  E_m = -(xi x^(1-m) / 2pi)    ∫_0^pi sin^(1-m) t  B^(m/2 - 1)  dt
E_m solves L_m in (x, y) and the adjoint L_m* in (xi, eta) away from the diagonal.

Contains:
- kernel_values(): vectorized E_m (or F_m) with analytic xi and eta derivatives
- fundamental_E(), fundamental_E_gradient(), fundamental_F(): single-pair forms
- kernel_field(): E_m as a ScalarField of one point with the other fixed
- theta_integral(), theta_asymptote(): the angular integrals and their large-k laws
- singularity_ratio(), singular_expansion(), branch_relation_residual()
- sample_circle_trace(), green_reproduce(): boundary representation of solutions
"""

import math

import numpy as np
from scipy import special

from axipot.data_models.geometry import CartesianPoint
from axipot.data_models.kernels import (
    CircleTrace,
    DifferentiableField,
    KernelPair,
    KernelValues,
    KernelVariable,
    ThetaFamily,
)
from axipot.data_models.quadrature import QuadratureConfig
from axipot.data_models.weinstein import KernelBranch, ScalarField, WeinsteinParam
from axipot.numerics.complexcore import cpow_posbase, geometric_breakpoints, integrate_vectorized
from axipot.utils.exceptions import DomainError, GeometryError, ResolutionError, SingularKernelError
from axipot.utils.logger import get_logger

logger = get_logger(name=__name__)

MIN_SEPARATION = 1e-12
HALF_PI = 0.5 * math.pi
TWO_PI = 2.0 * math.pi


# Private functions _______________________________________________________________________________

def _bracket_integrals(
    p: complex,
    x: np.ndarray,
    y: np.ndarray,
    xi: np.ndarray,
    eta: np.ndarray,
    cfg: QuadratureConfig,
    with_gradient: bool,
) -> np.ndarray:
    """
    I_a = ∫ sin^(p-1) B^(-p/2), and with gradients also
    I_b = ∫ sin^(p-1) B^(-p/2-1) dB/dxi and I_c = ∫ sin^(p-1) B^(-p/2-1),
    all over [0, pi] folded onto [0, pi/2]. Returns shape (1 or 3, *batch).
    """
    dx = x - xi
    dy = y - eta
    d2 = dx * dx + dy * dy
    cross = 4.0 * x * xi
    # layer width of the direct pair, also used for the mirrored batch
    width = float(np.sqrt(np.min(((np.abs(x) - xi) ** 2 + dy * dy) / np.abs(x * xi))))
    breakpoints = geometric_breakpoints(0.0, HALF_PI, width)
    d2_n, cross_n, dx_n, x_n = (a[..., None] for a in (d2, cross, dx, x))

    def integrand(theta: np.ndarray) -> np.ndarray:
        weight = np.exp((p - 1.0) * np.log(np.sin(theta)))
        total_a: np.ndarray | float = 0.0
        total_b: np.ndarray | float = 0.0
        total_c: np.ndarray | float = 0.0
        # t and pi - t share sin t; sin^2(t/2) and cos^2(t/2) swap
        for half_sin2 in (np.sin(0.5 * theta) ** 2, np.cos(0.5 * theta) ** 2):
            base = d2_n + cross_n * half_sin2
            power = np.exp(-0.5 * p * np.log(base))
            total_a = total_a + power
            if with_gradient:
                lowered = power / base
                total_c = total_c + lowered
                total_b = total_b + lowered * (-2.0 * dx_n + 4.0 * x_n * half_sin2)
        rows = [total_a, total_b, total_c] if with_gradient else [total_a]
        return np.stack(np.broadcast_arrays(*rows)) * weight

    values, error = integrate_vectorized(integrand, 0.0, HALF_PI, cfg, breakpoints)
    logger.debug("kernel integrals p=%s over %d pairs, %d breakpoints, error %.1e", p, d2.size, len(breakpoints), error)
    return values


def _evaluate(
    m: complex,
    x: np.ndarray,
    y: np.ndarray,
    xi: np.ndarray,
    eta: np.ndarray,
    cfg: QuadratureConfig,
    with_gradient: bool,
) -> KernelValues:
    """E_m without argument checks; x may be negative on the Re m >= 1 branch."""
    if WeinsteinParam(m=m).branch is KernelBranch.RE_M_GE_1:
        integrals = _bracket_integrals(m, x, y, xi, eta, cfg, with_gradient)
        xi_m = cpow_posbase(xi, m)
        value = -xi_m / TWO_PI * integrals[0]
        if not with_gradient:
            return KernelValues(value=value)
        d_xi = -(m * xi_m / xi * integrals[0] - 0.5 * m * xi_m * integrals[1]) / TWO_PI
        d_eta = -xi_m / TWO_PI * m * (y - eta) * integrals[2]
        return KernelValues(value=value, d_xi=d_xi, d_eta=d_eta)

    p = 2.0 - m
    integrals = _bracket_integrals(p, x, y, xi, eta, cfg, with_gradient)
    x_power = cpow_posbase(x, 1.0 - m)
    value = -xi * x_power / TWO_PI * integrals[0]
    if not with_gradient:
        return KernelValues(value=value)
    d_xi = -x_power / TWO_PI * (integrals[0] - 0.5 * p * xi * integrals[1])
    d_eta = -xi * x_power / TWO_PI * p * (y - eta) * integrals[2]
    return KernelValues(value=value, d_xi=d_xi, d_eta=d_eta)


def _pair_arrays(pair: KernelPair) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    return (
        np.asarray(pair.source.x, dtype=float),
        np.asarray(pair.source.y, dtype=float),
        np.asarray(pair.field_point.x, dtype=float),
        np.asarray(pair.field_point.y, dtype=float),
    )


# Exports _________________________________________________________________________________________

def kernel_values(
    m: complex,
    x: np.ndarray | float,
    y: np.ndarray | float,
    xi: np.ndarray | float,
    eta: np.ndarray | float,
    with_gradient: bool = False,
    reflected: bool = False,
    cfg: QuadratureConfig | None = None,
) -> KernelValues:
    """
    E_m(x, y, xi, eta) over broadcast arrays in one shared quadrature.
    Args:
        m (complex): Operator parameter.
        x, y (np.ndarray | float): Source coordinates, x > 0.
        xi, eta (np.ndarray | float): Field-point coordinates, xi > 0.
        with_gradient (bool): Also return d/dxi and d/deta.
        reflected (bool): Return F_m instead of E_m.
        cfg (QuadratureConfig | None): Quadrature tolerances.
    Returns:
        KernelValues: value (and d_xi, d_eta) with the broadcast shape.
    Raises:
        DomainError: a point outside the right half-plane.
        SingularKernelError: some pair closer than 1e-12; carries (1/2pi) ln d.
    """
    cfg = cfg or QuadratureConfig()
    m = complex(m)
    x, y, xi, eta = np.broadcast_arrays(*(np.asarray(a, dtype=float) for a in (x, y, xi, eta)))
    if not (np.all(x > 0.0) and np.all(xi > 0.0)):
        raise DomainError("kernels need both points in the right half-plane (x > 0, xi > 0)")
    distance = np.hypot(x - xi, y - eta)
    closest = float(np.min(distance))
    if closest < MIN_SEPARATION:
        leading = complex(math.log(closest) / TWO_PI) if closest > 0.0 else complex(-math.inf)
        raise SingularKernelError(f"kernel evaluated at separation {closest:.3g} < {MIN_SEPARATION}", leading_term=leading)

    direct = _evaluate(m, x, y, xi, eta, cfg, with_gradient)
    if not reflected or WeinsteinParam(m=m).branch is KernelBranch.RE_M_LT_1:
        return direct
    mirror = _evaluate(m, -x, y, xi, eta, cfg, with_gradient)
    if not with_gradient:
        return KernelValues(value=direct.value - mirror.value)
    return KernelValues(
        value=direct.value - mirror.value,
        d_xi=direct.d_xi - mirror.d_xi,
        d_eta=direct.d_eta - mirror.d_eta,
    )


def fundamental_E(m: complex, pair: KernelPair, cfg: QuadratureConfig | None = None) -> complex:
    """
    E_m at one pair; the branch is selected by Re m.
    Raises:
        SingularKernelError: d < 1e-12.
    """
    return complex(kernel_values(m, *_pair_arrays(pair), cfg=cfg).value)


def fundamental_E_gradient(m: complex, pair: KernelPair, cfg: QuadratureConfig | None = None) -> tuple[complex, complex]:
    """(dE_m/dxi, dE_m/deta) at one pair, differentiated under the integral sign."""
    values = kernel_values(m, *_pair_arrays(pair), with_gradient=True, cfg=cfg)
    return complex(values.d_xi), complex(values.d_eta)


def fundamental_F(m: complex, pair: KernelPair, cfg: QuadratureConfig | None = None) -> complex:
    """
    The reflected kernel: F_m = E_m for Re m < 1, and E_m(x, ...) - E_m(-x, ...) otherwise.
    On the Re m >= 1 branch the mirrored integral equals the direct one under t -> pi - t,
    so F_m vanishes identically there.
    """
    return complex(kernel_values(m, *_pair_arrays(pair), reflected=True, cfg=cfg).value)


def kernel_field(
    m: complex,
    fixed: CartesianPoint,
    vary: KernelVariable = KernelVariable.SOURCE,
    reflected: bool = False,
    cfg: QuadratureConfig | None = None,
) -> ScalarField:
    """
    E_m (or F_m) as a field of the source (x, y) with the field point fixed,
    or of the field point (xi, eta) with the source fixed.
    """
    def source_field(x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return kernel_values(m, x, y, fixed.x, fixed.y, reflected=reflected, cfg=cfg).value

    def field_point_field(xi: np.ndarray, eta: np.ndarray) -> np.ndarray:
        return kernel_values(m, fixed.x, fixed.y, xi, eta, reflected=reflected, cfg=cfg).value

    return source_field if KernelVariable(vary) is KernelVariable.SOURCE else field_point_field


def theta_integral(
    family: ThetaFamily | str,
    m: complex,
    k: float,
    cfg: QuadratureConfig | None = None,
) -> complex:
    """
    One of
        base:          ∫_0^pi sin^(m-1) t (1 + k sin^2(t/2))^(-m/2) dt
        sin2_weight:   ∫_0^pi sin^2(t/2) sin^(m-1) t (1 + k sin^2(t/2))^(-m/2-1) dt
        power_plus_1:  ∫_0^pi sin^(m-1) t (1 + k sin^2(t/2))^(-m/2-1) dt
    Raises:
        DomainError: k < 0, or Re m <= 0 (the weight is not integrable).
    """
    family = ThetaFamily(family)
    m = complex(m)
    if k < 0.0:
        raise DomainError(f"theta integrals need k >= 0, got {k}")
    if m.real <= 0.0:
        raise DomainError(f"sin^(m-1) is integrable only for Re m > 0, got m = {m}")
    cfg = cfg or QuadratureConfig()
    exponent = -0.5 * m if family is ThetaFamily.BASE else -0.5 * m - 1.0
    breakpoints = geometric_breakpoints(0.0, HALF_PI, 1.0 / math.sqrt(k)) if k > 0.0 else []

    def integrand(theta: np.ndarray) -> np.ndarray:
        weight = np.exp((m - 1.0) * np.log(np.sin(theta)))
        total = np.zeros(theta.shape, dtype=complex)
        for half_sin2 in (np.sin(0.5 * theta) ** 2, np.cos(0.5 * theta) ** 2):
            term = np.exp(exponent * np.log1p(k * half_sin2))
            total += half_sin2 * term if family is ThetaFamily.SIN2_WEIGHT else term
        return weight * total

    values, _ = integrate_vectorized(integrand, 0.0, HALF_PI, cfg, breakpoints)
    return complex(values)


def theta_asymptote(family: ThetaFamily | str, m: complex, k: float) -> complex:
    """
    Leading large-k behavior of theta_integral:
    base 2^(m-1) k^(-m/2) ln k, sin2_weight 2^(m-1) k^(-m/2-1) ln k, power_plus_1 2^m / (m k^(m/2)).
    """
    family = ThetaFamily(family)
    m = complex(m)
    if not k > 1.0:
        raise DomainError(f"the asymptote needs k > 1, got {k}")
    match family:
        case ThetaFamily.BASE:
            return cpow_posbase(2.0, m - 1.0) * cpow_posbase(k, -0.5 * m) * math.log(k)
        case ThetaFamily.SIN2_WEIGHT:
            return cpow_posbase(2.0, m - 1.0) * cpow_posbase(k, -0.5 * m - 1.0) * math.log(k)
        case ThetaFamily.POWER_PLUS_1:
            return cpow_posbase(2.0, m) / (m * cpow_posbase(k, 0.5 * m))


def singularity_ratio(m: complex, pair: KernelPair, cfg: QuadratureConfig | None = None) -> complex:
    """
    E_m / ln d, which tends to 1/(2pi) as d -> 0 at rate O(1/|ln d|).
    Raises:
        DomainError: d >= 1.
    """
    d = pair.distance
    if not d < 1.0:
        raise DomainError(f"the singularity ratio needs d < 1, got {d}")
    return fundamental_E(m, pair, cfg) / math.log(d)


def singular_expansion(m: complex, pair: KernelPair) -> complex:
    """
    Two-term expansion at coincidence:
    E_m ≈ (1/2pi) ln d - (1/4pi) [ln(4 x^2) + 2 (psi(1) - psi(a))],
    with a = m/2 for Re m >= 1 and a = (2-m)/2 otherwise.
    """
    m = complex(m)
    a = 0.5 * m if m.real >= 1.0 else 0.5 * (2.0 - m)
    x = pair.source.x
    constant = math.log(4.0 * x * x) + 2.0 * (special.psi(1.0) - special.psi(a))
    return complex(math.log(pair.distance) / TWO_PI - constant / (2.0 * TWO_PI))


def branch_relation_residual(m: complex, pair: KernelPair, cfg: QuadratureConfig | None = None) -> float:
    """
    |E_m - (xi/x)^(m-1) E_{2-m}|; the relation connects the two integral branches.
    Raises:
        DomainError: Re m = 1, where m and 2 - m share a branch.
    """
    m = complex(m)
    if m.real == 1.0:
        raise DomainError(f"the branch relation needs m and 2 - m on different branches, got Re m = 1 (m = {m})")
    scale = cpow_posbase(pair.field_point.x / pair.source.x, m - 1.0)
    return abs(fundamental_E(m, pair, cfg) - scale * fundamental_E(2.0 - m, pair, cfg))


def sample_circle_trace(
    solution: DifferentiableField,
    center: CartesianPoint,
    radius: float,
    J: int,
) -> CircleTrace:
    """
    Sample u and its gradient at J uniform angles on the circle.
    Raises:
        GeometryError: the circle leaves the right half-plane.
        ResolutionError: J < 3.
    """
    if not center.x - radius > 0.0:
        raise GeometryError(f"circle of center {center.x, center.y} and radius {radius} leaves the right half-plane")
    if J < 3:
        raise ResolutionError(f"a circle trace needs at least 3 samples, got {J}")
    phi = TWO_PI * np.arange(J) / J
    xi = center.x + radius * np.cos(phi)
    eta = center.y + radius * np.sin(phi)
    d_xi, d_eta = solution.gradient(xi, eta)
    return CircleTrace(center=center, radius=radius, values=solution.value(xi, eta), d_xi=d_xi, d_eta=d_eta)


def green_reproduce(
    m: complex,
    trace: CircleTrace,
    p: CartesianPoint,
    cfg: QuadratureConfig | None = None,
) -> complex:
    """
    Reproduce u(p) for a solution of L_m u = 0 inside the circle from its boundary trace:
    u(p) = -∮ [(u_xi E - u E_xi + (m/xi) u E) n_xi + (u_eta E - u E_eta) n_eta] ds,
    by the trapezoidal rule over the samples.
    Args:
        m (complex): Operator parameter.
        trace (CircleTrace): u, u_xi, u_eta on the circle.
        p (CartesianPoint): Interior point.
        cfg (QuadratureConfig | None): Tolerances of the kernel integrals.
    Returns:
        complex: The reproduced value.
    Raises:
        GeometryError: the circle leaves the right half-plane.
        DomainError: p is not strictly inside the circle.
    """
    m = complex(m)
    center = trace.center
    if not center.x - trace.radius > 0.0:
        raise GeometryError("the Green circle must lie in the right half-plane")
    if not math.hypot(p.x - center.x, p.y - center.y) < trace.radius:
        raise DomainError("the evaluation point must lie strictly inside the circle")

    phi = trace.angles
    xi, eta = trace.points
    kernel = kernel_values(m, p.x, p.y, xi, eta, with_gradient=True, cfg=cfg)
    u = trace.values
    normal_xi = (trace.d_xi * kernel.value - u * kernel.d_xi + m / xi * u * kernel.value) * np.cos(phi)
    normal_eta = (trace.d_eta * kernel.value - u * kernel.d_eta) * np.sin(phi)
    ds = trace.radius * TWO_PI / len(phi)
    return complex(-np.sum(normal_xi + normal_eta) * ds)
