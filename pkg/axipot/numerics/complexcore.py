"""
axipot/numerics/complexcore.py

Complex scalar special functions and quadrature primitives.

Contains:
- gamma(), log_gamma(): Lanczos approximation (g=7, 9 terms) with reflection
- cpow_posbase(): complex powers of positive bases, exp(z ln b)
- elliptic_K(): complete elliptic integral of the first kind by arithmetic-geometric mean
- integrate(): adaptive Gauss-Kronrod or double-exponential rule, per QuadratureConfig
- integrate_vectorized(): double-exponential rule over batches sharing one node set
- semi_infinite_integrate(), truncation_point(), geometric_breakpoints()
"""

import cmath
import math
from collections.abc import Callable, Sequence
from typing import Any

import numpy as np
from scipy import integrate as sp_integrate

from axipot.data_models.quadrature import EndpointMode, QuadratureConfig
from axipot.utils.exceptions import DomainError, PoleError, QuadratureError
from axipot.utils.logger import get_logger

logger = get_logger(name=__name__)

ScalarIntegrand = Callable[[float], complex]
VectorIntegrand = Callable[[np.ndarray], np.ndarray]

_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)

# double-exponential rule: t in [-T, T], step halved per level
_DE_T_MAX = 5.8
_DE_H0 = 0.5
_DE_MIN_LEVELS = 3
_DE_MAX_LEVELS = 10


# Private functions _______________________________________________________________________________

def _check_pole(z: complex) -> None:
    """Raise PoleError when z is a non-positive integer."""
    if z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real):
        raise PoleError(f"Gamma has a pole at z={z.real:g}")


def _lanczos_series(z: complex) -> tuple[complex, complex]:
    """Return (t, series) for the shifted argument z-1, Re z >= 1/2."""
    z -= 1.0
    series = complex(_LANCZOS_COEFFS[0])
    for i, coeff in enumerate(_LANCZOS_COEFFS[1:], start=1):
        series += coeff / (z + i)
    return z + _LANCZOS_G + 0.5, series


def _de_abscissae(a: float, b: float, t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    Nodes and weights of the tanh-sinh map of [a, b] at parameters t.
    The distance to the nearer endpoint is formed directly so nodes next to an
    endpoint keep full relative precision.
    """
    u = 0.5 * np.pi * np.sinh(t)
    ex = np.exp(-2.0 * np.abs(u))
    span = b - a
    offset = span * ex / (1.0 + ex)
    nodes = np.where(t < 0.0, a + offset, b - offset)
    weights = span * np.pi * np.cosh(t) * ex / (1.0 + ex) ** 2
    return nodes, weights


def _level_parameters(level: int) -> tuple[float, np.ndarray]:
    """Step and new t-parameters introduced at a refinement level."""
    h = _DE_H0 / 2**level
    k_max = int(_DE_T_MAX / h)
    if level == 0:
        return h, h * np.arange(-k_max, k_max + 1)
    odd = np.arange(1, k_max + 1, 2)
    return h, h * np.concatenate((-odd[::-1], odd))


def _tanh_sinh(f: VectorIntegrand, a: float, b: float, cfg: QuadratureConfig) -> tuple[np.ndarray, float]:
    """
    Double-exponential quadrature of a batch integrand on [a, b].
    Stops when successive levels agree to max(abs_tol, rel_tol*|I|) for every batch member.
    """
    max_levels = max(min(cfg.max_depth, _DE_MAX_LEVELS), _DE_MIN_LEVELS)
    total: np.ndarray | None = None
    error = math.inf
    for level in range(max_levels):
        h, t = _level_parameters(level)
        nodes, weights = _de_abscissae(a, b, t)
        contribution = h * (np.asarray(f(nodes), dtype=complex) @ weights)
        if total is None:
            total = contribution
            continue
        refined = 0.5 * total + contribution
        delta = np.abs(refined - total)
        total = refined
        error = float(np.max(delta))
        if not np.all(np.isfinite(total)):
            raise QuadratureError(
                "non-finite integrand values", best_estimate=complex(np.ravel(total)[0]), achieved_error=math.inf
            )
        if level + 1 >= _DE_MIN_LEVELS and np.all(delta <= np.maximum(cfg.abs_tol, cfg.rel_tol * np.abs(total))):
            logger.debug("tanh-sinh on [%g, %g] converged after %d levels (error %.2e)", a, b, level + 1, error)
            return total, error
    assert total is not None
    raise QuadratureError(
        "double-exponential rule did not converge",
        best_estimate=complex(np.ravel(total)[np.argmax(np.ravel(np.abs(total)))]),
        achieved_error=error,
    )


def _gauss_kronrod(f: ScalarIntegrand, a: float, b: float, cfg: QuadratureConfig) -> tuple[complex, float]:
    """Adaptive Gauss-Kronrod (QUADPACK) on the real and imaginary parts."""
    limit = max(50, 10 * cfg.max_depth)
    parts: list[float] = []
    errors: list[float] = []
    failures: list[str] = []
    for component in (lambda t: complex(f(t)).real, lambda t: complex(f(t)).imag):
        result: Any = sp_integrate.quad(
            component, a, b,
            epsabs=cfg.abs_tol, epsrel=cfg.rel_tol, limit=limit, full_output=1,
        )
        parts.append(result[0])
        errors.append(result[1])
        if len(result) > 3:
            failures.append(str(result[3]).splitlines()[0])
    value = complex(parts[0], parts[1])
    error = math.hypot(*errors)
    if failures:
        raise QuadratureError(f"Gauss-Kronrod did not converge: {failures[0]}", best_estimate=value, achieved_error=error)
    return value, error


def _vectorize(f: ScalarIntegrand) -> VectorIntegrand:
    """Lift a scalar integrand to node arrays."""
    def batch(nodes: np.ndarray) -> np.ndarray:
        return np.array([complex(f(float(t))) for t in nodes], dtype=complex)
    return batch


# Exports _________________________________________________________________________________________

def gamma(z: complex) -> complex:
    """
    Complex Gamma function.
    Args:
        z (complex): Argument, not a non-positive integer.
    Returns:
        complex: Gamma(z), relative error about 1e-15 for |z| <= 50.
    Raises:
        PoleError: z in {0, -1, -2, ...}.
    """
    z = complex(z)
    _check_pole(z)
    if z.real < 0.5:
        return cmath.pi / (cmath.sin(cmath.pi * z) * gamma(1.0 - z))
    t, series = _lanczos_series(z)
    return math.sqrt(2.0 * math.pi) * cmath.exp((z - 0.5) * cmath.log(t) - t) * series


def log_gamma(z: complex) -> complex:
    """
    A logarithm of the complex Gamma function, accurate for large |z|.
    The branch is not the principal one; only exp() and differences are meaningful.
    """
    z = complex(z)
    _check_pole(z)
    if z.real < 0.5:
        return cmath.log(cmath.pi) - cmath.log(cmath.sin(cmath.pi * z)) - log_gamma(1.0 - z)
    t, series = _lanczos_series(z)
    return _HALF_LOG_TWO_PI + (z - 0.5) * cmath.log(t) - t + cmath.log(series)


def gamma_ratio(numerator: complex, denominator: complex) -> complex:
    """Gamma(numerator)/Gamma(denominator) through log-Gamma differences."""
    return cmath.exp(log_gamma(numerator) - log_gamma(denominator))


def cpow_posbase(b: float | np.ndarray, z: complex | np.ndarray) -> Any:
    """
    Complex power of a positive base, exp(z ln b) with the real logarithm.
    Args:
        b (float | np.ndarray): Base(s), all > 0.
        z (complex | np.ndarray): Exponent(s), broadcast against b.
    Returns:
        complex for scalar inputs, otherwise a complex ndarray.
    Raises:
        DomainError: any base <= 0 (or NaN).
    """
    base = np.asarray(b, dtype=float)
    if not np.all(base > 0.0):
        raise DomainError("cpow_posbase requires a positive base")
    result = np.exp(np.asarray(z, dtype=complex) * np.log(base))
    if result.ndim == 0:
        return complex(result)
    return result


def elliptic_K(k: float) -> float:
    """
    Complete elliptic integral of the first kind K(k) = pi / (2 agm(1, sqrt(1-k^2))).
    Args:
        k (float): Modulus in [0, 1).
    Returns:
        float: K(k).
    Raises:
        DomainError: k outside [0, 1).
    """
    if not 0.0 <= k < 1.0:
        raise DomainError(f"elliptic_K needs 0 <= k < 1, got {k}")
    a, b = 1.0, math.sqrt((1.0 - k) * (1.0 + k))
    for _ in range(64):
        if abs(a - b) <= 4.0 * np.finfo(float).eps * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return math.pi / (2.0 * a)


def integrate(f: ScalarIntegrand, a: float, b: float, cfg: QuadratureConfig | None = None) -> complex:
    """
    Integrate a complex-valued function of one real variable over [a, b].
    Regular integrands go to adaptive Gauss-Kronrod; with
    endpoint_mode=algebraic-singularity the double-exponential rule is used, which
    handles (t-a)^s and (b-t)^s for Re s > -1.
    Args:
        f (ScalarIntegrand): Integrand.
        a (float): Lower limit.
        b (float): Upper limit, a < b (infinite limits only in regular mode).
        cfg (QuadratureConfig | None): Tolerances; defaults from Config.
    Returns:
        complex: The integral.
    Raises:
        DomainError: a >= b, or infinite limits in singular mode.
        QuadratureError: no convergence; carries the best estimate.
    """
    cfg = cfg or QuadratureConfig()
    if not a < b:
        raise DomainError(f"integrate needs a < b, got [{a}, {b}]")
    if cfg.endpoint_mode is EndpointMode.REGULAR:
        value, _ = _gauss_kronrod(f, a, b, cfg)
        return value
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError("singular endpoint mode needs finite limits; use semi_infinite_integrate")
    values, _ = _tanh_sinh(_vectorize(f), float(a), float(b), cfg)
    return complex(values)


def integrate_vectorized(
    f: VectorIntegrand,
    a: float,
    b: float,
    cfg: QuadratureConfig | None = None,
    breakpoints: Sequence[float] = (),
) -> tuple[np.ndarray, float]:
    """
    Double-exponential quadrature of a batch integrand.
    f maps an array of N nodes to an array of shape (..., N); every batch member is
    integrated on the same nodes and refinement levels, so the discretization error is
    a smooth function of the batch parameters.
    Args:
        f (VectorIntegrand): Batch integrand.
        a (float): Lower limit (finite).
        b (float): Upper limit (finite), a < b.
        cfg (QuadratureConfig | None): Tolerances.
        breakpoints (Sequence[float]): Interior split points.
    Returns:
        tuple[np.ndarray, float]: Integrals of shape (...) and the achieved error.
    """
    cfg = cfg or QuadratureConfig()
    if not a < b:
        raise DomainError(f"integrate needs a < b, got [{a}, {b}]")
    edges = [float(a), *sorted(p for p in breakpoints if a < p < b), float(b)]
    total: np.ndarray | complex = 0.0
    error = 0.0
    for left, right in zip(edges[:-1], edges[1:]):
        piece, piece_error = _tanh_sinh(f, left, right, cfg)
        total = total + piece
        error += piece_error
    if len(edges) > 2:
        logger.debug("integrated over %d pieces of [%g, %g]", len(edges) - 1, a, b)
    return np.asarray(total), error


def truncation_point(a: float, decay_rate: float, amplitude: float, tol: float) -> float:
    """
    Cut T such that the tail of an integrand bounded by amplitude*exp(-decay_rate*(t-a))
    contributes less than tol beyond T.
    """
    if decay_rate <= 0.0:
        raise DomainError(f"decay rate must be positive, got {decay_rate}")
    reach = math.log(max(amplitude, tol) / (decay_rate * tol)) / decay_rate
    return a + max(reach, 1.0 / decay_rate)


def semi_infinite_integrate(
    f: ScalarIntegrand,
    a: float,
    cfg: QuadratureConfig | None = None,
    decay_rate: float | None = None,
    amplitude: float = 1.0,
) -> complex:
    """
    Integrate f over [a, +inf), or over the whole line when a = -inf.
    With a decay rate the domain is truncated where the exponential tail bound drops
    below abs_tol; without one QUADPACK's infinite-range transform is used.
    Args:
        f (ScalarIntegrand): Integrand decaying integrably.
        a (float): Lower limit.
        cfg (QuadratureConfig | None): Tolerances and endpoint mode at a.
        decay_rate (float | None): Exponential decay rate of |f| as t -> inf.
        amplitude (float): Constant of the tail bound amplitude*exp(-decay_rate*(t-a)).
    Returns:
        complex: The integral.
    """
    cfg = cfg or QuadratureConfig()
    singular = cfg.endpoint_mode is EndpointMode.ALGEBRAIC_SINGULARITY
    if decay_rate is not None:
        if not math.isfinite(a):
            raise DomainError("a truncated integral needs a finite lower limit")
        upper = truncation_point(a, decay_rate, amplitude, cfg.abs_tol)
        logger.debug("semi-infinite integral truncated at %g", upper)
        return integrate(f, a, upper, cfg)
    regular = cfg.model_copy(update={"endpoint_mode": EndpointMode.REGULAR})
    if singular:
        if not math.isfinite(a):
            raise DomainError("singular endpoint mode needs a finite lower limit")
        return integrate(f, a, a + 1.0, cfg) + integrate(f, a + 1.0, math.inf, regular)
    return integrate(f, a, math.inf, regular)


def geometric_breakpoints(a: float, b: float, scale: float, ratio: float = 4.0) -> list[float]:
    """
    Split points a + scale*ratio^j inside (a, b) for an endpoint layer of width scale at a.
    Returns an empty list when the layer is not thin relative to the interval.
    """
    points: list[float] = []
    if not scale > 0.0:
        return points
    step = scale
    while a + step < b - (b - a) / ratio:
        points.append(a + step)
        step *= ratio
    return points
