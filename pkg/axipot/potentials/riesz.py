"""
axipot/potentials/riesz.py

Gram matrix of the annulus family on the two boundary circles. The family pairs, for every
mode n, A_n = prefactor Q_n(tau)/Q_n(tau0) e^(in theta) with B_n = prefactor P_n(tau)/P_n(tau1) e^(in theta),
P_n of order exterior_order(m, n).
With the boundary inner product
    <f, g> = sum over tau in {tau0, tau1} of (1/2pi) ∫ f conj(g) sh^(Re m - 1) tau / (ch tau - cos theta)^(Re m) dtheta,
the weight cancels |prefactor|^2, distinct modes are orthogonal and the matrix splits into the
2x2 blocks M_n.

Contains:
- gram_block(), gram_sweep(): closed-form blocks
- frame_bounds(): extreme eigenvalues over |n| <= N
- gram_inner_product(), gram_offdiag_check(): the inner product by quadrature
- block_decay_rates(): fitted decay of ||M_n - I|| and 1 - det M_n
"""

import math
from collections.abc import Iterable

import numpy as np

from axipot.data_models.legendre import LegendreKind
from axipot.data_models.quadrature import QuadratureConfig
from axipot.data_models.riesz import GramBlock
from axipot.numerics.complexcore import cpow_posbase, integrate_vectorized
from axipot.numerics.legendre import legendre_ratio
from axipot.potentials.spectral import exterior_order, prefactor_values
from axipot.utils.exceptions import DomainError, SingularModeError
from axipot.utils.logger import get_logger

logger = get_logger(name=__name__)

TWO_PI = 2.0 * math.pi


# Private functions _______________________________________________________________________________

def _check_annulus(tau0: float, tau1: float) -> None:
    if not 0.0 < tau0 < tau1:
        raise DomainError(f"the Gram matrix needs 0 < tau0 < tau1, got tau0={tau0}, tau1={tau1}")


def _mode_ratios(m: complex, n: int, tau0: float, tau1: float, cfg: QuadratureConfig) -> tuple[complex, complex]:
    """(q, p) = (Q(ch tau1)/Q(ch tau0), P(ch tau0)/P(ch tau1)) for degree |n| - 1/2."""
    mu = 0.5 * (complex(m) - 1.0)
    q = complex(legendre_ratio(LegendreKind.Q, n, mu, tau1, tau0, cfg)[0])
    p = complex(legendre_ratio(LegendreKind.P, n, exterior_order(m, n), tau0, tau1, cfg)[0])
    return q, p


def _weight(m: complex, tau: float, theta: np.ndarray) -> np.ndarray:
    re_m = complex(m).real
    gap = 2.0 * math.sinh(0.5 * tau) ** 2 + 2.0 * np.sin(0.5 * theta) ** 2
    return math.sinh(tau) ** (re_m - 1.0) * np.real(cpow_posbase(gap, -re_m))


def _member(index: int, q: complex, p: complex) -> tuple[int, complex, complex]:
    """Mode and boundary amplitudes (on tau0, on tau1) of family member index; even is A, odd is B."""
    n = index >> 1
    if index & 1:
        return n, p, 1.0
    return n, 1.0, q


# Exports _________________________________________________________________________________________

def gram_block(
    m: complex,
    n: int,
    tau0: float,
    tau1: float,
    cfg: QuadratureConfig | None = None,
) -> GramBlock:
    """
    M_n in closed form, with eigenvalues of the Hermitian 2x2 block.
    Args:
        m (complex): Weinstein parameter.
        n (int): Fourier mode; M_-n = M_n.
        tau0 (float): Outer boundary circle.
        tau1 (float): Inner boundary circle, tau1 > tau0.
        cfg (QuadratureConfig | None): Tolerances for the Legendre functions.
    Returns:
        GramBlock: The block.
    Raises:
        DomainError: tau0, tau1 not ordered.
        LegendreParameterError: Legendre parameters outside the supported range.
        SingularModeError: The block is not positive definite.
    """
    _check_annulus(tau0, tau1)
    cfg = cfg or QuadratureConfig()
    q, p = _mode_ratios(m, n, tau0, tau1, cfg)
    a = 1.0 + abs(q) ** 2
    d = 1.0 + abs(p) ** 2
    b = p.conjugate() + q
    det = a * d - abs(b) ** 2
    closed_det = abs(1.0 - q * p) ** 2
    eig_max = 0.5 * (a + d) + math.hypot(0.5 * (a - d), abs(b))
    eig_min = closed_det / eig_max
    if not eig_min > 0.0:
        raise SingularModeError(n, closed_det)
    return GramBlock(
        n=n,
        entries=[[complex(a), b], [b.conjugate(), complex(d)]],
        det=complex(det),
        eig_min=eig_min,
        eig_max=eig_max,
        q_ratio=q,
        p_ratio=p,
    )


def gram_sweep(
    m: complex,
    tau0: float,
    tau1: float,
    N: int,
    cfg: QuadratureConfig | None = None,
) -> list[GramBlock]:
    """Blocks for n = -N..N; negative modes reuse the block of |n|."""
    if N < 0:
        raise DomainError(f"N must be non-negative, got {N}")
    blocks = {n: gram_block(m, n, tau0, tau1, cfg) for n in range(N + 1)}
    logger.debug("computed %d Gram blocks for m=%s on [%g, %g]", N + 1, m, tau0, tau1)
    return [
        blocks[n] if n >= 0 else blocks[-n].model_copy(update={"n": n})
        for n in range(-N, N + 1)
    ]


def frame_bounds(
    m: complex,
    tau0: float,
    tau1: float,
    N: int,
    cfg: QuadratureConfig | None = None,
) -> tuple[float, float]:
    """
    (c2, C2): the smallest and largest block eigenvalue over |n| <= N, the Riesz bounds of the
    family truncated to those modes.
    """
    if N < 1:
        raise DomainError(f"frame bounds need N >= 1, got {N}")
    blocks = gram_sweep(m, tau0, tau1, N, cfg)
    c2 = min(block.eig_min for block in blocks)
    C2 = max(block.eig_max for block in blocks)
    logger.info("frame bounds for m=%s, N=%d: c2=%.6g, C2=%.6g", m, N, c2, C2)
    return c2, C2


def gram_inner_product(
    m: complex,
    tau0: float,
    tau1: float,
    i: int,
    j: int,
    cfg: QuadratureConfig | None = None,
) -> complex:
    """
    <c_i, c_j> by quadrature in theta on both circles. Member i has mode i >> 1 and is of
    the Q kind for even i, the P kind for odd i.
    """
    _check_annulus(tau0, tau1)
    cfg = cfg or QuadratureConfig()
    n_i, n_j = i >> 1, j >> 1
    ratios_i = _mode_ratios(m, n_i, tau0, tau1, cfg)
    ratios_j = ratios_i if abs(n_j) == abs(n_i) else _mode_ratios(m, n_j, tau0, tau1, cfg)
    _, left_i, right_i = _member(i, *ratios_i)
    _, left_j, right_j = _member(j, *ratios_j)
    levels = (tau0, tau1)

    def integrand(theta: np.ndarray) -> np.ndarray:
        rows = []
        for tau in levels:
            pre = prefactor_values(m, np.full(theta.shape, tau), theta)
            rows.append(pre * pre.conjugate() * _weight(m, tau, theta) * np.exp(1j * (n_i - n_j) * theta))
        return np.stack(rows)

    integrals, error = integrate_vectorized(integrand, 0.0, TWO_PI, cfg)
    integrals = integrals / TWO_PI
    logger.debug("<c_%d, c_%d> by quadrature (error %.1e)", i, j, error)
    return complex(left_i * np.conj(left_j) * integrals[0] + right_i * np.conj(right_j) * integrals[1])


def gram_offdiag_check(
    m: complex,
    tau0: float,
    tau1: float,
    i: int,
    j: int,
    cfg: QuadratureConfig | None = None,
) -> float:
    """|<c_i, c_j>|, expected to vanish when the members carry different modes."""
    return abs(gram_inner_product(m, tau0, tau1, i, j, cfg))


def block_decay_rates(
    m: complex,
    tau0: float,
    tau1: float,
    n_range: Iterable[int] = range(10, 101),
    cfg: QuadratureConfig | None = None,
) -> tuple[float, float]:
    """
    Least-squares decay rates r in ||M_n - I|| ~ e^(-r n) and |1 - det M_n| ~ e^(-r n).
    The first tends to tau1 - tau0 and the second to 2 (tau1 - tau0).
    """
    modes = np.array(list(n_range), dtype=float)
    if modes.size < 2:
        raise DomainError("decay fit needs at least two modes")
    blocks = [gram_block(m, int(n), tau0, tau1, cfg) for n in modes]
    offsets = np.log([block.offset_norm for block in blocks])
    defects = np.log([abs(block.det_defect) for block in blocks])
    offset_rate = -float(np.polyfit(modes, offsets, 1)[0])
    defect_rate = -float(np.polyfit(modes, defects, 1)[0])
    logger.debug("Gram decay rates %.4f and %.4f for width %.4f", offset_rate, defect_rate, tau1 - tau0)
    return offset_rate, defect_rate
