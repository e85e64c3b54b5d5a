"""
axipot/numerics/legendre.py

Associated Legendre functions P_nu^mu(cosh tau) and Q_nu^mu(cosh tau) of complex order mu.

The solver degrees are half-integers nu = n - 1/2; degree symmetry maps n to -n for both
kinds, so every evaluation runs at |n|. Q carries the phase exp(i*pi*mu). Values are
returned as a mantissa and a real log-scale so large degrees never overflow.

Representations:
- P for Re mu < 1/2: the (0, pi) integral of (ch + sh cos)^(mu+nu) sin^(-2mu), folded onto [0, pi/2]
- P for Re mu >= 1/2: integer order-raising recursion from an order with Re mu in [-1/2, 1/2)
- Q: the (0, pi) integral of (ch + cos)^(mu-nu-1) sin^(2nu+1), folded onto [0, pi/2]
- Q for Re mu < 1/2 and |n| >= 8: the (tau, inf) exponential integral

Contains:
- legendre_P(), legendre_Q(): half-integer degree evaluations (LegendreEval)
- legendre_P_degree(), legendre_Q_degree(): arbitrary complex (P) or real (Q) degree
- legendre_values(): vectorized over tau, scaled form
- legendre_derivative(), legendre_derivative_values(): d/dtau through the degree recursion
- legendre_ratio(), legendre_ratio_derivative(): F(tau)/F(tau_ref) and F'(tau)/F(tau_ref) without overflow
- asymptotic_P(), asymptotic_Q(), asymptotic_eval(): large-degree equivalents
- legendre_Q_whipple(), whipple_check(): Q through the Whipple formula and its residual
"""

import cmath
import math
from typing import NamedTuple

import numpy as np

from axipot.data_models.legendre import LegendreEval, LegendreKind, LegendreMethod
from axipot.data_models.quadrature import QuadratureConfig
from axipot.numerics.complexcore import (
    gamma,
    gamma_ratio,
    geometric_breakpoints,
    integrate_vectorized,
    log_gamma,
    truncation_point,
)
from axipot.utils.exceptions import DomainError, LegendreParameterError
from axipot.utils.logger import get_logger

logger = get_logger(name=__name__)

LN2 = math.log(2.0)
SQRT_PI = math.sqrt(math.pi)
HALF_PI = 0.5 * math.pi

# smallest |n| routed to the exponential Q representation
EXPONENTIAL_MIN_DEGREE = 8


class ScaledValues(NamedTuple):
    """Function values mantissa * exp(log_scale) over an array of tau."""
    mantissa: np.ndarray
    log_scale: np.ndarray
    method: LegendreMethod
    est_error: float


# Private functions _______________________________________________________________________________

def _tau_array(tau: float | np.ndarray) -> np.ndarray:
    """Flatten tau to a 1-D float array and check tau > 0."""
    values = np.atleast_1d(np.asarray(tau, dtype=float)).ravel()
    if values.size == 0:
        raise DomainError("tau must not be empty")
    if not np.all(values > 0.0):
        raise DomainError(f"Legendre functions are evaluated at cosh(tau) with tau > 0, got min {values.min()}")
    return values


def _relative_error(error: float, values: np.ndarray) -> float:
    """Quadrature error relative to the smallest batch magnitude."""
    floor = float(np.min(np.abs(values))) if values.size else 0.0
    return error / floor if floor > 0.0 else error


def _q_at_pole(nu: float, mu: complex) -> bool:
    """Whether Gamma(nu + mu + 1) has a pole."""
    z = nu + mu + 1.0
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


def _check_q_parameters(nu: float, mu: complex) -> None:
    """Raise when Gamma(nu + mu + 1) has a pole."""
    if _q_at_pole(nu, mu):
        raise LegendreParameterError(f"Q is undefined: nu + mu + 1 = {(nu + mu + 1.0).real:g} is a non-positive integer")


def _p2_batch(
    degrees: np.ndarray,
    mu: complex,
    tau: np.ndarray,
    cfg: QuadratureConfig,
) -> tuple[np.ndarray, np.ndarray, float]:
    """
    P_nu^mu(cosh tau) for Re mu < 1/2 over D degrees and T values of tau.
    The integrand is divided by exp(tau*|Re(mu+nu)|), its maximum modulus over theta.
    Returns:
        tuple[np.ndarray, np.ndarray, float]: Mantissas (D, T), log-scales (D, T), relative error.
    """
    exponent = mu + degrees.astype(complex)
    log_scale = np.abs(exponent.real)[:, None] * tau[None, :]
    ch = np.cosh(tau)[:, None]
    sh = np.sinh(tau)[:, None]
    e_minus = np.exp(-tau)[:, None]

    def integrand(theta: np.ndarray) -> np.ndarray:
        # ch + sh*cos(theta) and ch - sh*cos(theta) = e^-tau + 2 sh sin^2(theta/2)
        log_near = np.log(ch + sh * np.cos(theta))
        log_far = np.log(e_minus + 2.0 * sh * np.sin(0.5 * theta) ** 2)
        e = exponent[:, None, None]
        shift = log_scale[:, :, None]
        folded = np.exp(e * log_near[None] - shift) + np.exp(e * log_far[None] - shift)
        return folded * np.exp(-2.0 * mu * np.log(np.sin(theta)))

    integral, error = integrate_vectorized(integrand, 0.0, HALF_PI, cfg.singular())
    prefactor = np.exp(mu * LN2 - mu * np.log(np.sinh(tau))) / (SQRT_PI * gamma(0.5 - mu))
    return integral * prefactor[None, :], log_scale, _relative_error(error, integral)


def _p_scaled(nu: complex, mu: complex, tau: np.ndarray, cfg: QuadratureConfig) -> ScaledValues:
    """P_nu^mu for any order: direct quadrature, or order raising when Re mu >= 1/2."""
    raises = int(math.floor(mu.real + 0.5)) if mu.real >= 0.5 else 0
    mu0 = mu - raises
    degrees = nu - np.arange(raises + 1)
    mantissa, log_scale, error = _p2_batch(degrees, mu0, tau, cfg)
    if raises == 0:
        return ScaledValues(mantissa[0], log_scale[0], LegendreMethod.INTEGRAL_P2, error)

    logger.debug("P order %s raised %d times from %s", mu, raises, mu0)
    common = log_scale.max(axis=0)
    ch = np.cosh(tau)
    sh = np.sinh(tau)
    # table[d] = P_{nu-d}^{mu0+j} on the common scale
    table = [mantissa[d] * np.exp(log_scale[d] - common) for d in range(raises + 1)]
    for j in range(raises):
        order = mu0 + j
        table = [
            ((nu - d - order) * ch * table[d] - (nu - d + order) * table[d + 1]) / sh
            for d in range(raises - j)
        ]
    return ScaledValues(table[0], common, LegendreMethod.RECURSION, error * (raises + 1))


def _q_trig_scaled(
    nu: float,
    mu: complex,
    tau: np.ndarray,
    cfg: QuadratureConfig,
    regularized: bool = False,
) -> ScaledValues:
    """
    Q_nu^mu for real nu > -1 from the (0, pi) representation; Q_nu^mu / Gamma(nu + mu + 1) when
    regularized, which stays finite at the poles.
    With phi = pi - theta the integrand is [g/g_max]^(nu+1/2) (ch - cos phi)^(mu-1/2), where
    g = sin^2(phi)/(ch - cos phi) peaks at g_max = 2 e^-tau; folding adds the ch + cos phi term.
    """
    if not regularized:
        _check_q_parameters(nu, mu)
    power = nu + 0.5
    log_g_max = (LN2 - tau)[:, None]
    sh_half = np.sinh(0.5 * tau)[:, None]
    ch = np.cosh(tau)[:, None]

    def integrand(phi: np.ndarray) -> np.ndarray:
        log_sin2 = 2.0 * np.log(np.sin(phi))
        total = np.zeros((tau.size, phi.size), dtype=complex)
        for base in (2.0 * sh_half ** 2 + 2.0 * np.sin(0.5 * phi) ** 2, ch + np.cos(phi)):
            log_base = np.log(base)
            total += np.exp(power * (log_sin2 - log_base - log_g_max) + (mu - 0.5) * log_base)
        return total

    breakpoints = geometric_breakpoints(0.0, HALF_PI, scale=2.0 * math.sinh(0.5 * float(tau.min())))
    integral, error = integrate_vectorized(integrand, 0.0, HALF_PI, cfg.singular(), breakpoints)
    if regularized:
        factor = cmath.exp(1j * math.pi * mu) / (gamma(nu + 1.0) * math.sqrt(2.0))
    else:
        factor = cmath.exp(1j * math.pi * mu) * gamma_ratio(nu + mu + 1.0, nu + 1.0) / math.sqrt(2.0)
    mantissa = factor * integral * np.exp(-mu * np.log(np.sinh(tau)))
    return ScaledValues(mantissa, -power * tau, LegendreMethod.INTEGRAL_Q, _relative_error(error, integral))


def _q_exponential_scaled(nu: float, mu: complex, tau: np.ndarray, cfg: QuadratureConfig) -> ScaledValues:
    """
    Q_nu^mu for Re mu < 1/2 from the (tau, inf) representation, shifted by s = theta - tau:
    ch(tau + s) - ch(tau) = 2 sh(tau + s/2) sh(s/2).
    """
    _check_q_parameters(nu, mu)
    rate = nu + mu.real + 1.0
    order_power = mu.real + 0.5
    # |integral| ~ |Gamma(1/2 - mu)| (nu + 1/2)^(Re mu - 1/2) sh^(-Re mu - 1/2)
    magnitude = abs(gamma(0.5 - mu)) * (nu + 0.5) ** (mu.real - 0.5) * np.sinh(tau) ** (-order_power)
    scaled = cfg.scaled(float(magnitude.min()))
    amplitude = 2.0 * 2.0 ** order_power * np.exp(-order_power * tau)
    upper = max(truncation_point(0.0, rate, float(a), scaled.abs_tol) for a in amplitude)
    exponent = -mu - 0.5
    shifted = tau[:, None]

    def integrand(s: np.ndarray) -> np.ndarray:
        log_base = LN2 + np.log(np.sinh(shifted + 0.5 * s)) + np.log(np.sinh(0.5 * s))
        return np.exp(-(nu + 0.5) * s + exponent * log_base)

    breakpoints = geometric_breakpoints(0.0, upper, scale=min(float(tau.min()), 1.0 / (nu + 0.5)))
    integral, error = integrate_vectorized(integrand, 0.0, upper, scaled.singular(), breakpoints)
    factor = math.sqrt(HALF_PI) * cmath.exp(1j * math.pi * mu) / gamma(0.5 - mu)
    mantissa = factor * integral * np.exp(mu * np.log(np.sinh(tau)))
    return ScaledValues(mantissa, -(nu + 0.5) * tau, LegendreMethod.INTEGRAL_Q, _relative_error(error, integral))


def _combine(first: ScaledValues, second: ScaledValues, a: np.ndarray | complex, b: np.ndarray | complex) -> tuple[np.ndarray, np.ndarray]:
    """a*first + b*second on a common log-scale."""
    common = np.maximum(first.log_scale, second.log_scale)
    mantissa = a * first.mantissa * np.exp(first.log_scale - common) + b * second.mantissa * np.exp(second.log_scale - common)
    return mantissa, common


def _to_eval(values: ScaledValues) -> LegendreEval:
    """Single-point LegendreEval from a one-element batch."""
    return LegendreEval.from_scaled(
        complex(values.mantissa[0]),
        float(values.log_scale[0]),
        values.method,
        values.est_error,
    )


def _ratio_to_last(values: ScaledValues) -> np.ndarray:
    """Every batch member but the last divided by the last."""
    mantissa, log_scale = values.mantissa, values.log_scale
    return mantissa[:-1] / mantissa[-1] * np.exp(log_scale[:-1] - log_scale[-1])


def _derivative_terms(
    kind: LegendreKind,
    degree: int,
    mu: complex,
    tau: np.ndarray,
    cfg: QuadratureConfig,
) -> tuple[ScaledValues, ScaledValues, complex]:
    """
    (F_nu, F_{nu-1}, c) with d/dtau F_nu = [nu ch F_nu - c F_{nu-1}] / sh, nu = degree - 1/2.
    Near the poles of Gamma(nu + mu + 1) the Q terms are divided by the Gamma factor of their
    own degree; c absorbs the mismatch, with Gamma(nu + mu) (nu + mu) = Gamma(nu + mu + 1).
    """
    nu = degree - 0.5
    upper_pole = kind is LegendreKind.Q and _q_at_pole(nu, mu)
    lower_pole = kind is LegendreKind.Q and _q_at_pole(nu - 1.0, mu)
    if not (upper_pole or lower_pole):
        upper = legendre_values(kind, degree, mu, tau, cfg)
        return upper, legendre_values(kind, degree - 1, mu, tau, cfg), nu + mu
    if upper_pole:
        upper = _q_trig_scaled(nu, mu, tau, cfg, regularized=True)
        coefficient = 1.0 + 0.0j
    else:
        upper = legendre_values(kind, degree, mu, tau, cfg)
        coefficient = gamma(nu + mu + 1.0)
    if degree >= 1:
        lower = _q_trig_scaled(nu - 1.0, mu, tau, cfg, regularized=True)
    else:
        # Q_{-3/2} = Q_{1/2}, so the regularized pair differs by Gamma(mu + 3/2) / Gamma(mu - 1/2)
        half = _q_trig_scaled(0.5, mu, tau, cfg, regularized=True)
        lower = half._replace(mantissa=half.mantissa * ((mu + 0.5) * (mu - 0.5)))
    return upper, lower, coefficient


def _derivative(
    kind: LegendreKind,
    degree: int,
    mu: complex,
    tau: np.ndarray,
    cfg: QuadratureConfig,
) -> tuple[ScaledValues, ScaledValues]:
    """(F_nu, d/dtau F_nu) in the normalization of _derivative_terms."""
    upper, lower, coefficient = _derivative_terms(kind, degree, mu, tau, cfg)
    nu = degree - 0.5
    sh = np.sinh(tau)
    mantissa, log_scale = _combine(upper, lower, nu * np.cosh(tau) / sh, -coefficient / sh)
    return upper, ScaledValues(mantissa, log_scale, upper.method, max(upper.est_error, lower.est_error))


# Exports _________________________________________________________________________________________

def legendre_values(
    kind: LegendreKind,
    n: int,
    mu: complex,
    tau: float | np.ndarray,
    cfg: QuadratureConfig | None = None,
) -> ScaledValues:
    """
    F_{n-1/2}^mu(cosh tau), F = P or Q, over an array of tau.
    Every tau shares one quadrature node set, so ratios between batch members are smooth.
    Args:
        kind (LegendreKind): P or Q.
        n (int): Degree index; nu = n - 1/2 and n, -n give the same function.
        mu (complex): Order.
        tau (float | np.ndarray): Points, all > 0.
        cfg (QuadratureConfig | None): Tolerances.
    Returns:
        ScaledValues: 1-D mantissas and log-scales, the method and a relative error estimate.
    Raises:
        DomainError: some tau <= 0.
        LegendreParameterError: Q with nu + mu + 1 a non-positive integer.
    """
    cfg = cfg or QuadratureConfig()
    taus = _tau_array(tau)
    mu = complex(mu)
    degree = abs(int(n))
    nu = degree - 0.5
    if kind is LegendreKind.P:
        return _p_scaled(complex(nu), mu, taus, cfg)
    if mu.real < 0.5 and degree >= EXPONENTIAL_MIN_DEGREE and nu + mu.real + 1.0 > 0.0:
        logger.debug("Q_{%s}^{%s}: exponential representation", nu, mu)
        return _q_exponential_scaled(nu, mu, taus, cfg)
    logger.debug("Q_{%s}^{%s}: (0, pi) representation", nu, mu)
    return _q_trig_scaled(nu, mu, taus, cfg)


def legendre_P(n: int, mu: complex, tau: float, cfg: QuadratureConfig | None = None) -> LegendreEval:
    """
    P_{n-1/2}^mu(cosh tau).
    Args:
        n (int): Degree index, any integer (P_nu = P_{-nu-1} maps n to -n).
        mu (complex): Order.
        tau (float): Point, > 0.
        cfg (QuadratureConfig | None): Tolerances.
    Returns:
        LegendreEval: method integral-P2 for Re mu < 1/2, recursion otherwise.
    """
    return _to_eval(legendre_values(LegendreKind.P, n, mu, tau, cfg))


def legendre_Q(n: int, mu: complex, tau: float, cfg: QuadratureConfig | None = None) -> LegendreEval:
    """
    Q_{n-1/2}^mu(cosh tau), phase exp(i*pi*mu) included.
    Args:
        n (int): Degree index, any integer (Q_{-nu-1} = Q_nu at half-integer nu).
        mu (complex): Order.
        tau (float): Point, > 0.
        cfg (QuadratureConfig | None): Tolerances.
    Returns:
        LegendreEval: method integral-Q.
    Raises:
        LegendreParameterError: |n| - 1/2 + mu + 1 is a non-positive integer.
    """
    return _to_eval(legendre_values(LegendreKind.Q, n, mu, tau, cfg))


def legendre_P_degree(nu: complex, mu: complex, tau: float, cfg: QuadratureConfig | None = None) -> LegendreEval:
    """P_nu^mu(cosh tau) for an arbitrary complex degree."""
    cfg = cfg or QuadratureConfig()
    return _to_eval(_p_scaled(complex(nu), complex(mu), _tau_array(tau), cfg))


def legendre_Q_degree(nu: float, mu: complex, tau: float, cfg: QuadratureConfig | None = None) -> LegendreEval:
    """
    Q_nu^mu(cosh tau) for a real degree nu > -1 from the (0, pi) representation.
    Raises:
        DomainError: nu <= -1.
    """
    if not nu > -1.0:
        raise DomainError(f"the (0, pi) representation of Q needs nu > -1, got {nu}")
    cfg = cfg or QuadratureConfig()
    return _to_eval(_q_trig_scaled(float(nu), complex(mu), _tau_array(tau), cfg))


def legendre_derivative_values(
    kind: LegendreKind,
    n: int,
    mu: complex,
    tau: float | np.ndarray,
    cfg: QuadratureConfig | None = None,
) -> ScaledValues:
    """
    d/dtau F_nu^mu(cosh tau) = [nu ch F_nu - (nu + mu) F_{nu-1}] / sh, nu = n - 1/2.
    The degree nu - 1 is index n - 1; n <= 0 is first mapped to |n|.
    Raises:
        LegendreParameterError: Q at a pole of Gamma(nu + mu + 1).
    """
    cfg = cfg or QuadratureConfig()
    taus = _tau_array(tau)
    mu = complex(mu)
    if kind is LegendreKind.Q:
        _check_q_parameters(abs(int(n)) - 0.5, mu)
    return _derivative(kind, abs(int(n)), mu, taus, cfg)[1]


def legendre_derivative(
    kind: LegendreKind,
    n: int,
    mu: complex,
    tau: float,
    cfg: QuadratureConfig | None = None,
) -> LegendreEval:
    """d/dtau of P or Q_{n-1/2}^mu(cosh tau) at one point."""
    return _to_eval(legendre_derivative_values(kind, n, mu, tau, cfg))


def legendre_ratio(
    kind: LegendreKind,
    n: int,
    mu: complex,
    tau: float | np.ndarray,
    tau_ref: float,
    cfg: QuadratureConfig | None = None,
) -> np.ndarray:
    """
    F(cosh tau) / F(cosh tau_ref), the phase-free quantity the solvers consume.
    tau_ref is evaluated in the same batch as tau. At a pole of Gamma(nu + mu + 1) the
    common factor is dropped, so the Q ratio stays defined there.
    Returns:
        np.ndarray: Ratios, same length as the flattened tau.
    """
    cfg = cfg or QuadratureConfig()
    taus = np.append(_tau_array(tau), _tau_array(tau_ref))
    mu = complex(mu)
    degree = abs(int(n))
    if kind is LegendreKind.Q and _q_at_pole(degree - 0.5, mu):
        values = _q_trig_scaled(degree - 0.5, mu, taus, cfg, regularized=True)
    else:
        values = legendre_values(kind, degree, mu, taus, cfg)
    return _ratio_to_last(values)


def legendre_ratio_derivative(
    kind: LegendreKind,
    n: int,
    mu: complex,
    tau: float | np.ndarray,
    tau_ref: float,
    cfg: QuadratureConfig | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """
    F(cosh tau) / F(cosh tau_ref) and d/dtau F(cosh tau) / F(cosh tau_ref) from one batch.
    Like legendre_ratio, Q stays defined at the poles of Gamma(nu + mu + 1).
    Returns:
        tuple[np.ndarray, np.ndarray]: Ratios and derivative ratios.
    """
    cfg = cfg or QuadratureConfig()
    taus = np.append(_tau_array(tau), _tau_array(tau_ref))
    mu = complex(mu)
    degree = abs(int(n))
    values, derivative = _derivative(kind, degree, mu, taus, cfg)
    ratio = derivative.mantissa[:-1] / values.mantissa[-1] * np.exp(derivative.log_scale[:-1] - values.log_scale[-1])
    return _ratio_to_last(values), ratio


def asymptotic_eval(kind: LegendreKind, n: int, mu: complex, tau: float) -> LegendreEval:
    """
    Leading large-degree behaviour for nu = n - 1/2 -> +inf:
    P ~ e^(tau/2) nu^(mu-1/2) e^(tau*nu) / sqrt(2 pi sh tau),
    Q ~ e^(i pi mu) e^(-tau/2) sqrt(pi / (2 sh tau)) nu^(mu-1/2) e^(-tau*nu).
    Raises:
        DomainError: n < 1 or tau <= 0.
    """
    if n < 1:
        raise DomainError(f"the large-degree equivalents need n >= 1, got {n}")
    if not tau > 0.0:
        raise DomainError(f"tau must be positive, got {tau}")
    mu = complex(mu)
    nu = n - 0.5
    growth = cmath.exp((mu - 0.5) * math.log(nu))
    sh = math.sinh(tau)
    if kind is LegendreKind.P:
        return LegendreEval.from_scaled(growth / math.sqrt(2.0 * math.pi * sh), n * tau, LegendreMethod.ASYMPTOTIC)
    mantissa = cmath.exp(1j * math.pi * mu) * math.sqrt(math.pi / (2.0 * sh)) * growth
    return LegendreEval.from_scaled(mantissa, -n * tau, LegendreMethod.ASYMPTOTIC)


def asymptotic_P(n: int, mu: complex, tau: float) -> complex:
    """Large-degree equivalent of P_{n-1/2}^mu(cosh tau)."""
    return asymptotic_eval(LegendreKind.P, n, mu, tau).value


def asymptotic_Q(n: int, mu: complex, tau: float) -> complex:
    """Large-degree equivalent of Q_{n-1/2}^mu(cosh tau)."""
    return asymptotic_eval(LegendreKind.Q, n, mu, tau).value


def legendre_Q_whipple(n: int, mu: complex, tau: float, cfg: QuadratureConfig | None = None) -> LegendreEval:
    """
    Q_nu^mu(cosh tau) = e^(i pi mu) sqrt(pi/2) Gamma(mu+nu+1) / sqrt(sh tau) * P_{-mu-1/2}^{-nu-1/2}(coth tau).
    coth(tau) = cosh(sigma) with sh(sigma) = 1/sh(tau); nu = |n| - 1/2.
    Raises:
        PoleError: mu + nu + 1 is a non-positive integer.
    """
    if not tau > 0.0:
        raise DomainError(f"tau must be positive, got {tau}")
    mu = complex(mu)
    degree = abs(int(n))
    nu = degree - 0.5
    gamma(mu + nu + 1.0)  # pole check
    sigma = math.asinh(1.0 / math.sinh(tau))
    p_value = legendre_P_degree(-mu - 0.5, complex(-degree), sigma, cfg)
    log_gamma_value = log_gamma(mu + nu + 1.0)
    # fold |Gamma| into the log-scale and keep its phase in the mantissa
    mantissa = (
        cmath.exp(1j * math.pi * mu + 1j * log_gamma_value.imag)
        * math.sqrt(HALF_PI / math.sinh(tau))
        * p_value.mantissa
    )
    return LegendreEval.from_scaled(
        mantissa,
        p_value.log_scale + log_gamma_value.real,
        LegendreMethod.WHIPPLE,
        p_value.est_error,
    )


def whipple_check(n: int, mu: complex, tau: float, cfg: QuadratureConfig | None = None) -> float:
    """
    Relative residual |Q - Q_whipple| / |Q| between the direct Q integral and the Whipple
    formula evaluated through P at coth(tau).
    """
    direct = legendre_Q(n, mu, tau, cfg)
    via_p = legendre_Q_whipple(n, mu, tau, cfg)
    return abs(via_p.ratio_to(direct) - 1.0)
