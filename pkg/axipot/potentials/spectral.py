"""
axipot/potentials/spectral.py

Fourier-Legendre series solutions of L_m u = 0 in bipolar coordinates. On the circle tau = tau0,
u(tau0, theta) = prefactor(tau0, theta) * sum_n c_n e^(in theta), where
prefactor = sh^((1-m)/2)(tau) (ch tau - cos theta)^(m/2). Each mode continues inside the circle
(tau > tau0) with Q_{n-1/2}^((m-1)/2)(ch tau) and outside it (tau < tau0) with P_{n-1/2} of order
exterior_order(m, n), which is (m-1)/2 except on the few modes where the two are proportional.

Contains:
- prefactor(), prefactor_values(), exterior_order(), sample_count(), trace_from_field(), fourier_coeffs()
- solve_disk(), solve_exterior(), solve_annulus(), decompose()
- evaluate(), evaluate_many(), evaluate_gradient(), resum()
- bipo_residual(), transformed_field(): the equation satisfied in (tau, theta)
- coefficient_decay_ratio(): fitted geometric decay of |c_n|
- solution_to_json(), solution_from_json()
"""

import json
import math
import warnings
from collections.abc import Callable

import numpy as np

from axipot.config import Config
from axipot.data_models.geometry import BipolarPoint, CartesianPoint
from axipot.data_models.legendre import LegendreKind
from axipot.data_models.quadrature import QuadratureConfig
from axipot.data_models.spectral import BoundaryTrace, FourierLegendreSolution, SolutionKind
from axipot.data_models.weinstein import ScalarField
from axipot.numerics.bipolar import (
    bipolar_gradient_to_cartesian,
    bipolar_to_cartesian,
    cartesian_to_bipolar,
)
from axipot.numerics.complexcore import cpow_posbase
from axipot.numerics.legendre import legendre_ratio, legendre_ratio_derivative
from axipot.utils.exceptions import (
    ConvergenceWarning,
    DomainError,
    GeometryError,
    ResolutionError,
    SingularModeError,
    StepError,
)
from axipot.utils.logger import get_logger

logger = get_logger(name=__name__)

# |det| below which an annulus mode is treated as singular
MIN_MODE_DET = 1e-14
# evaluations closer than this to a data circle get a truncation check
TAIL_CHECK_DISTANCE = 1e-3
# distance from an even integer m >= 2 at which a mode takes the companion P family
COMPANION_ORDER_TOL = 1e-8

BipolarField = Callable[[np.ndarray, np.ndarray], np.ndarray]


# Private functions _______________________________________________________________________________

def _mu(m: complex) -> complex:
    return 0.5 * (complex(m) - 1.0)


def _ratios(
    kind: LegendreKind,
    degree: int,
    mu: complex,
    tau: np.ndarray,
    tau_ref: float,
    with_derivative: bool,
    cfg: QuadratureConfig,
) -> tuple[np.ndarray, np.ndarray | None]:
    if with_derivative:
        return legendre_ratio_derivative(kind, degree, mu, tau, tau_ref, cfg)
    return legendre_ratio(kind, degree, mu, tau, tau_ref, cfg), None


def _series(
    sol: FourierLegendreSolution,
    tau: np.ndarray,
    theta: np.ndarray,
    with_derivative: bool,
    cfg: QuadratureConfig,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    S = sum_n [a_n rQ_n + b_n rP_n] e^(in theta) over flat arrays, with dS/dtau and dS/dtheta
    when requested. Modes n and -n share their Legendre ratios.
    """
    total = np.zeros(tau.shape, dtype=complex)
    d_tau = np.zeros(tau.shape, dtype=complex)
    d_theta = np.zeros(tau.shape, dtype=complex)
    families = (
        (LegendreKind.Q, sol.q_coeffs, sol.tau0),
        (LegendreKind.P, sol.p_coeffs, sol.p_reference),
    )
    for degree in range(sol.n_max + 1):
        indices = (degree,) if degree == 0 else (degree, -degree)
        for kind, coeffs, tau_ref in families:
            weights = [(n, complex(coeffs.get(n, 0.0))) for n in indices]
            weights = [(n, c) for n, c in weights if c != 0.0]
            if not weights:
                continue
            order = _mu(sol.m) if kind is LegendreKind.Q else exterior_order(sol.m, degree)
            ratio, d_ratio = _ratios(kind, degree, order, tau, tau_ref, with_derivative, cfg)
            for n, c in weights:
                wave = c * np.exp(1j * n * theta)
                total += wave * ratio
                if with_derivative:
                    d_tau += wave * d_ratio
                    d_theta += 1j * n * wave * ratio
    return total, d_tau, d_theta


def _check_tail(sol: FourierLegendreSolution, tau: np.ndarray) -> None:
    """Warn when the last retained modes are not damped at points next to a data circle."""
    scale = sol.scale()
    if scale == 0.0 or sol.n_max == 0:
        return
    n = sol.n_max
    tail = np.zeros(tau.shape)
    distance = np.full(tau.shape, np.inf)
    for coeffs, tau_ref in ((sol.q_coeffs, sol.tau0), (sol.p_coeffs, sol.p_reference)):
        edge = max(abs(coeffs.get(n, 0.0)), abs(coeffs.get(-n, 0.0)))
        if edge == 0.0:
            continue
        gap = np.abs(tau - tau_ref)
        tail = np.maximum(tail, edge * np.exp(-n * gap) / scale)
        distance = np.minimum(distance, gap)
    flagged = (tail > Config.QUAD_REL_TOL) & (distance < TAIL_CHECK_DISTANCE)
    if np.any(flagged):
        worst = float(np.max(tail[flagged]))
        logger.warning("series truncated at n_max=%d may not have converged (tail %.1e)", n, worst)
        warnings.warn(
            f"tail estimate {worst:.1e} exceeds {Config.QUAD_REL_TOL:.0e} next to a data circle; raise n_max",
            ConvergenceWarning,
            stacklevel=3,
        )


def _chart(sol: FourierLegendreSolution, x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Bipolar coordinates of points on the solution's region."""
    if not np.all(x > 0.0):
        raise DomainError("series solutions are evaluated on the right half-plane x > 0")
    tau, theta = cartesian_to_bipolar(x, y, sol.alpha)
    if not np.all(np.isfinite(tau)):
        raise GeometryError(f"the pole ({sol.alpha}, 0) has tau = +inf")
    if not np.all(sol.contains(tau)):
        outside = float(tau[~sol.contains(tau)].flat[0])
        raise DomainError(f"tau = {outside:.6g} lies outside the {sol.kind} region of the solution")
    return tau, theta


def _truncation(n_max: int | None) -> int:
    n_max = Config.SPECTRAL_N_MAX if n_max is None else int(n_max)
    if n_max < 0:
        raise DomainError(f"n_max must be non-negative, got {n_max}")
    return n_max


# Exports _________________________________________________________________________________________

def prefactor_values(m: complex, tau: np.ndarray, theta: np.ndarray) -> np.ndarray:
    """The prefactor over broadcast (tau, theta) arrays, tau > 0 assumed."""
    tau, theta = np.broadcast_arrays(np.asarray(tau, dtype=float), np.asarray(theta, dtype=float))
    # ch - cos = 2 sh^2(tau/2) + 2 sin^2(theta/2) keeps full precision near the axis
    gap = 2.0 * np.sinh(0.5 * tau) ** 2 + 2.0 * np.sin(0.5 * theta) ** 2
    return np.asarray(cpow_posbase(np.sinh(tau), 0.5 * (1.0 - m)) * cpow_posbase(gap, 0.5 * m), dtype=complex)


def prefactor(m: complex, p: BipolarPoint) -> complex:
    """
    sh^((1-m)/2)(tau) (ch tau - cos theta)^(m/2), both powers of positive reals.
    Raises:
        DomainError: tau <= 0.
    """
    if not p.tau > 0.0:
        raise DomainError(f"the prefactor needs tau > 0, got {p.tau}")
    return complex(prefactor_values(complex(m), np.asarray(p.tau), np.asarray(p.theta)))


def exterior_order(m: complex, n: int) -> complex:
    """
    Order of the P function carrying mode n: (m-1)/2, except that for m = 2, 4, ... and
    |n| <= m/2 - 1 P and Q of that order are proportional, and the mode takes P of order -(m-1)/2.
    """
    m = complex(m)
    half = round(m.real / 2.0)
    if half >= 1 and abs(m - 2.0 * half) < COMPANION_ORDER_TOL and abs(int(n)) <= half - 1:
        return -_mu(m)
    return _mu(m)


def sample_count(n_max: int) -> int:
    """Smallest power of two >= 4*n_max (at least 1)."""
    return 1 << max(4 * int(n_max) - 1, 0).bit_length()


def trace_from_field(field: ScalarField, tau: float, alpha: float, J: int) -> BoundaryTrace:
    """
    Sample a Cartesian field on the level circle tau at theta_j = 2*pi*j/J.
    Raises:
        DomainError: tau <= 0.
        ValidationError: J not a power of two.
    """
    if not tau > 0.0:
        raise DomainError(f"level circles need tau > 0, got {tau}")
    theta = 2.0 * np.pi * np.arange(J) / J
    x, y = bipolar_to_cartesian(tau, theta, alpha)
    return BoundaryTrace(tau=tau, alpha=alpha, values=np.asarray(field(x, y), dtype=complex) * np.ones(J))


def fourier_coeffs(m: complex, trace: BoundaryTrace, n_max: int | None = None) -> dict[int, complex]:
    """
    Discrete Fourier coefficients of the weighted trace u(tau0, theta_j) / prefactor(tau0, theta_j)
    for |n| <= n_max. The weight is evaluated at the same angle as the data.
    Raises:
        ResolutionError: J < 4*n_max.
    """
    m = complex(m)
    n_max = _truncation(n_max)
    if trace.size < 4 * n_max:
        raise ResolutionError(f"{trace.size} samples cannot resolve n_max={n_max}; need at least {4 * n_max}")
    weighted = trace.values / prefactor_values(m, np.full(trace.size, trace.tau), trace.angles)
    spectrum = np.fft.fft(weighted) / trace.size
    return {n: complex(spectrum[n % trace.size]) for n in range(-n_max, n_max + 1)}


def solve_disk(m: complex, trace: BoundaryTrace, n_max: int | None = None) -> FourierLegendreSolution:
    """
    Dirichlet problem in the disk tau >= tau0 bounded by the trace's circle.
    Args:
        m (complex): Weinstein parameter.
        trace (BoundaryTrace): Data on tau = tau0.
        n_max (int | None): Truncation; Config.SPECTRAL_N_MAX by default.
    Returns:
        FourierLegendreSolution: kind disk, Q ratios normalized at tau0.
    Raises:
        ResolutionError: too few samples.
    """
    coeffs = fourier_coeffs(m, trace, n_max)
    n_max = max(abs(n) for n in coeffs)
    logger.debug("disk solve: tau0=%g, alpha=%g, n_max=%d", trace.tau, trace.alpha, n_max)
    return FourierLegendreSolution(
        m=complex(m), alpha=trace.alpha, kind=SolutionKind.DISK, tau0=trace.tau, q_coeffs=coeffs, n_max=n_max,
    )


def solve_exterior(m: complex, trace: BoundaryTrace, n_max: int | None = None) -> FourierLegendreSolution:
    """
    Dirichlet problem on the half-plane outside the trace's circle (0 < tau <= tau0).
    For Re m < 1 this is the solution vanishing on the axis and it is unique; for Re m >= 1
    the Fourier-matched P series is returned, which is one solution among others.
    Raises:
        ResolutionError: too few samples.
    """
    coeffs = fourier_coeffs(m, trace, n_max)
    n_max = max(abs(n) for n in coeffs)
    if complex(m).real >= 1.0:
        logger.debug("exterior solve with Re m >= 1: the P series is not the only solution")
    return FourierLegendreSolution(
        m=complex(m), alpha=trace.alpha, kind=SolutionKind.EXTERIOR, tau0=trace.tau, p_coeffs=coeffs, n_max=n_max,
    )


def solve_annulus(
    m: complex,
    trace0: BoundaryTrace,
    trace1: BoundaryTrace,
    n_max: int | None = None,
    cfg: QuadratureConfig | None = None,
) -> FourierLegendreSolution:
    """
    Dirichlet problem on tau0 < tau < tau1. Per mode, with rQ = Q(tau1)/Q(tau0) and rP = P(tau0)/P(tau1),
    a_n + rP b_n = g0_n and rQ a_n + b_n = g1_n, solved by the explicit 2x2 inverse.
    Args:
        trace0 (BoundaryTrace): Data on the outer circle tau0.
        trace1 (BoundaryTrace): Data on the inner circle tau1 > tau0, same alpha.
    Raises:
        DomainError: tau1 <= tau0 or mismatched alpha.
        SingularModeError: some |det| < 1e-14.
    """
    if not trace1.tau > trace0.tau:
        raise DomainError(f"annulus needs tau0 < tau1, got {trace0.tau}, {trace1.tau}")
    if not math.isclose(trace0.alpha, trace1.alpha, rel_tol=1e-12):
        raise DomainError(f"both traces need one bipolar chart, got alpha={trace0.alpha} and {trace1.alpha}")
    cfg = cfg or QuadratureConfig()
    m = complex(m)
    mu = _mu(m)
    g0 = fourier_coeffs(m, trace0, n_max)
    g1 = fourier_coeffs(m, trace1, n_max)
    n_max = max(abs(n) for n in g0)
    q_coeffs: dict[int, complex] = {}
    p_coeffs: dict[int, complex] = {}
    for degree in range(n_max + 1):
        r_q = complex(legendre_ratio(LegendreKind.Q, degree, mu, trace1.tau, trace0.tau, cfg)[0])
        r_p = complex(legendre_ratio(LegendreKind.P, degree, exterior_order(m, degree), trace0.tau, trace1.tau, cfg)[0])
        det = 1.0 - r_p * r_q
        logger.debug("annulus mode %d: rQ=%.3e, rP=%.3e, det=%s", degree, abs(r_q), abs(r_p), det)
        if abs(det) < MIN_MODE_DET:
            raise SingularModeError(degree, det)
        for n in {degree, -degree}:
            q_coeffs[n] = (g0[n] - r_p * g1[n]) / det
            p_coeffs[n] = (g1[n] - r_q * g0[n]) / det
    return FourierLegendreSolution(
        m=m,
        alpha=trace0.alpha,
        kind=SolutionKind.ANNULUS,
        tau0=trace0.tau,
        tau1=trace1.tau,
        q_coeffs=q_coeffs,
        p_coeffs=p_coeffs,
        n_max=n_max,
    )


def decompose(sol: FourierLegendreSolution) -> tuple[FourierLegendreSolution, FourierLegendreSolution]:
    """
    Split an annulus solution into v, the Q series (a disk solution regular across the inner
    circle), and w, the P series (an exterior solution normalized at tau1, vanishing on the axis
    when Re m < 1). v + w equals sol on the annulus.
    Raises:
        DomainError: sol is not an annulus solution.
    """
    if sol.kind is not SolutionKind.ANNULUS:
        raise DomainError(f"only annulus solutions decompose, got {sol.kind}")
    interior = FourierLegendreSolution(
        m=sol.m, alpha=sol.alpha, kind=SolutionKind.DISK, tau0=sol.tau0, q_coeffs=dict(sol.q_coeffs), n_max=sol.n_max,
    )
    exterior = FourierLegendreSolution(
        m=sol.m, alpha=sol.alpha, kind=SolutionKind.EXTERIOR, tau0=sol.tau1, p_coeffs=dict(sol.p_coeffs), n_max=sol.n_max,
    )
    return interior, exterior


def evaluate_many(
    sol: FourierLegendreSolution,
    x: np.ndarray | float,
    y: np.ndarray | float,
    cfg: QuadratureConfig | None = None,
) -> np.ndarray:
    """
    The truncated series at Cartesian points (broadcasting). All points share one quadrature
    discretization of every Legendre ratio.
    Raises:
        DomainError: a point off the right half-plane or outside the solution's region.
        GeometryError: a point at the pole (alpha, 0).
    Warns:
        ConvergenceWarning: next to a data circle while the last modes are not negligible.
    """
    cfg = cfg or QuadratureConfig()
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    tau, theta = _chart(sol, x.ravel(), y.ravel())
    _check_tail(sol, tau)
    series, _, _ = _series(sol, tau, theta, False, cfg)
    return (prefactor_values(sol.m, tau, theta) * series).reshape(x.shape)


def evaluate(
    sol: FourierLegendreSolution,
    p: BipolarPoint | CartesianPoint,
    cfg: QuadratureConfig | None = None,
) -> complex:
    """
    The series at one point. Bipolar points in another chart are converted through Cartesian
    coordinates.
    """
    if isinstance(p, BipolarPoint):
        if not p.tau > 0.0:
            raise DomainError(f"series solutions need tau > 0, got {p.tau}")
        x, y = bipolar_to_cartesian(p.tau, p.theta, p.alpha)
    else:
        x, y = p.x, p.y
    return complex(evaluate_many(sol, x, y, cfg))


def evaluate_gradient(
    sol: FourierLegendreSolution,
    x: np.ndarray | float,
    y: np.ndarray | float,
    cfg: QuadratureConfig | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """
    (u_x, u_y) of the series: Legendre derivative ratios, the logarithmic derivatives of the
    prefactor, then the bipolar chain rule.
    """
    cfg = cfg or QuadratureConfig()
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    tau, theta = _chart(sol, x.ravel(), y.ravel())
    series, d_tau, d_theta = _series(sol, tau, theta, True, cfg)
    m = complex(sol.m)
    weight = prefactor_values(m, tau, theta)
    gap = 2.0 * np.sinh(0.5 * tau) ** 2 + 2.0 * np.sin(0.5 * theta) ** 2
    log_tau = 0.5 * (1.0 - m) / np.tanh(tau) + 0.5 * m * np.sinh(tau) / gap
    log_theta = 0.5 * m * np.sin(theta) / gap
    u_tau = weight * (log_tau * series + d_tau)
    u_theta = weight * (log_theta * series + d_theta)
    u_x, u_y = bipolar_gradient_to_cartesian(u_tau, u_theta, tau, theta, sol.alpha)
    return u_x.reshape(x.shape), u_y.reshape(x.shape)


def resum(
    interior: FourierLegendreSolution,
    exterior: FourierLegendreSolution,
    x: np.ndarray | float,
    y: np.ndarray | float,
    cfg: QuadratureConfig | None = None,
) -> np.ndarray:
    """v + w at points where both parts are defined."""
    return evaluate_many(interior, x, y, cfg) + evaluate_many(exterior, x, y, cfg)


def transformed_field(m: complex, u: ScalarField, alpha: float) -> BipolarField:
    """v(tau, theta) = u(x, y) / prefactor(tau, theta) for a Cartesian field u."""
    m = complex(m)

    def field(tau: np.ndarray, theta: np.ndarray) -> np.ndarray:
        x, y = bipolar_to_cartesian(tau, theta, alpha)
        return np.asarray(u(x, y), dtype=complex) / prefactor_values(m, tau, theta)

    return field


def bipo_residual(m: complex, v: BipolarField, point: BipolarPoint, h: float | None = None) -> complex:
    """
    v_tt + v_thth + coth(tau) v_t + (1/4 - (m-1)^2 / (4 sh^2 tau)) v at point, by the five-point
    stencil in (tau, theta), all stencil points in one call.
    Raises:
        StepError: h <= 0 or tau <= h.
    """
    h = Config.FD_STEP if h is None else h
    if not h > 0.0:
        raise StepError(f"finite-difference step must be positive, got {h}")
    if not point.tau > h:
        raise StepError(f"stencil of width h = {h:g} crosses tau = 0")
    m = complex(m)
    tau, theta = point.tau, point.theta
    taus = np.array([tau, tau + h, tau - h, tau, tau])
    thetas = np.array([theta, theta, theta, theta + h, theta - h])
    center, east, west, north, south = np.asarray(v(taus, thetas), dtype=complex)
    v_t = (east - west) / (2.0 * h)
    laplacian = (east + west + north + south - 4.0 * center) / (h * h)
    sh = math.sinh(tau)
    return complex(laplacian + v_t / math.tanh(tau) + (0.25 - (m - 1.0) ** 2 / (4.0 * sh * sh)) * center)


def coefficient_decay_ratio(coeffs: dict[int, complex], n_min: int = 8) -> float:
    """
    rho of a fit max(|c_n|, |c_-n|) ~ C rho^n over n_min <= n <= max |n|, by least squares on the logs.
    Raises:
        DomainError: fewer than two modes in the fitting range.
    """
    top = max((abs(n) for n in coeffs), default=0)
    degrees = np.arange(n_min, top + 1)
    if degrees.size < 2:
        raise DomainError(f"decay fit needs modes up to at least {n_min + 1}, got {top}")
    floor = np.finfo(float).tiny
    magnitudes = [max(abs(coeffs.get(n, 0.0)), abs(coeffs.get(-n, 0.0)), floor) for n in degrees]
    slope, _ = np.polyfit(degrees, np.log(magnitudes), 1)
    return float(math.exp(slope))


def solution_to_json(sol: FourierLegendreSolution) -> str:
    """
    {m: [re, im], alpha, kind, tau0, tau1?, n_max, q_coeffs: [[n, re, im], ...], p_coeffs: [...]},
    modes in increasing n.
    """
    document: dict = {
        "m": [sol.m.real, sol.m.imag],
        "alpha": sol.alpha,
        "kind": str(sol.kind),
        "tau0": sol.tau0,
    }
    if sol.tau1 is not None:
        document["tau1"] = sol.tau1
    document["n_max"] = sol.n_max
    document["q_coeffs"] = [[n, c.real, c.imag] for n, c in sorted(sol.q_coeffs.items())]
    document["p_coeffs"] = [[n, c.real, c.imag] for n, c in sorted(sol.p_coeffs.items())]
    return json.dumps(document, indent=2)


def solution_from_json(text: str) -> FourierLegendreSolution:
    """
    Parse the document written by solution_to_json.
    Raises:
        DomainError: malformed document.
        ValidationError: inconsistent fields.
    """
    try:
        document = json.loads(text)
        re, im = document["m"]
        return FourierLegendreSolution(
            m=complex(re, im),
            alpha=document["alpha"],
            kind=SolutionKind(document["kind"]),
            tau0=document["tau0"],
            tau1=document.get("tau1"),
            q_coeffs={int(n): complex(a, b) for n, a, b in document.get("q_coeffs", [])},
            p_coeffs={int(n): complex(a, b) for n, a, b in document.get("p_coeffs", [])},
            n_max=document["n_max"],
        )
    except (json.JSONDecodeError, KeyError, TypeError) as e:
        raise DomainError(f"not a series solution document: {e}") from e
