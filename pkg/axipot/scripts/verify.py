"""
axipot/scripts/verify.py

The invariant suite behind `axipot verify`: operator identities, kernel equations, Legendre
and Poisson cross-checks, disk and annulus solves and a Gram determinant, all for one parameter m.

Contains:
- INVARIANT_CHECKS: name -> (tolerance, check)
- run_invariant_suite(): evaluate every check that applies to m
"""

import math
from collections.abc import Callable

import numpy as np

from axipot.data_models.geometry import CartesianPoint
from axipot.data_models.kernels import KernelPair, KernelVariable
from axipot.data_models.verification import InvariantCheck
from axipot.data_models.weinstein import ReferenceKind
from axipot.numerics.bipolar import bipolar_to_cartesian, disk_geometry
from axipot.numerics.legendre import whipple_check
from axipot.potentials.halfplane import poisson_constant, poisson_constant_by_quadrature
from axipot.potentials.kernels import branch_relation_residual, fundamental_E, kernel_field
from axipot.potentials.riesz import gram_block
from axipot.potentials.spectral import evaluate_many, sample_count, solve_annulus, solve_disk, trace_from_field
from axipot.potentials.weinstein import (
    apply_Lm,
    apply_Lm_star,
    conjugation_residuals,
    mean_value_residual,
    random_smooth_field,
    reference_solution,
    weinstein_principle_residual,
)
from axipot.utils.exceptions import AxipotInputError, AxipotNumericalError, DomainError
from axipot.utils.logger import get_logger

logger = get_logger(name=__name__)

SUITE_SEED = 20240607

SOURCE = CartesianPoint(x=1.0, y=0.2)
FIELD_POINT = CartesianPoint(x=1.7, y=-0.4)
SAMPLE_POINT = CartesianPoint(x=1.2, y=0.3)

Check = Callable[[complex, np.random.Generator], tuple[float, str]]


# Private functions _______________________________________________________________________________

def _principle(m: complex, rng: np.random.Generator) -> tuple[float, str]:
    field = random_smooth_field(rng)
    return weinstein_principle_residual(field, m, SAMPLE_POINT), "random smooth field at (1.2, 0.3)"


def _conjugation(m: complex, rng: np.random.Generator) -> tuple[float, str]:
    r1, r2 = conjugation_residuals(random_smooth_field(rng), m, SAMPLE_POINT, 5e-4)
    return max(abs(r1), abs(r2)), "both conjugation identities, h = 5e-4"


def _kernel_source(m: complex, rng: np.random.Generator) -> tuple[float, str]:
    field = kernel_field(m, FIELD_POINT, KernelVariable.SOURCE)
    return abs(apply_Lm(field, m, SOURCE, 1e-4)), "L_m E_m in (x, y)"


def _kernel_field_point(m: complex, rng: np.random.Generator) -> tuple[float, str]:
    field = kernel_field(m, SOURCE, KernelVariable.FIELD_POINT)
    return abs(apply_Lm_star(field, m, FIELD_POINT, 1e-4)), "L_m* E_m in (xi, eta)"


def _branch_relation(m: complex, rng: np.random.Generator) -> tuple[float, str]:
    pair = KernelPair(source=SOURCE, field_point=FIELD_POINT)
    scale = max(1.0, abs(fundamental_E(m, pair)))
    return branch_relation_residual(m, pair) / scale, "E_m against (xi/x)^(m-1) E_(2-m)"


def _whipple(m: complex, rng: np.random.Generator) -> tuple[float, str]:
    return whipple_check(2, 0.5 * (m - 1.0), 0.8), "Q of degree 3/2 at tau = 0.8"


def _poisson_constant(m: complex, rng: np.random.Generator) -> tuple[float, str]:
    closed = poisson_constant(m)
    return abs(poisson_constant_by_quadrature(m) - closed) / abs(closed), "C_m by quadrature, relative"


def _mean_value(m: complex, rng: np.random.Generator) -> tuple[float, str]:
    if m.imag != 0.0 or m.real != round(m.real):
        raise DomainError("the mean-value formula applies to integer m")
    order = int(round(m.real))
    return mean_value_residual(order, reference_solution(ReferenceKind.QUADRATIC, m), 0.8), "quadratic solution, r = 0.8"


def _disk_solve(m: complex, rng: np.random.Generator) -> tuple[float, str]:
    geometry = disk_geometry(3.0, 1.0)
    exact = reference_solution(ReferenceKind.LINEAR_Y, m)
    trace = trace_from_field(exact, geometry.tau0, geometry.alpha, sample_count(32))
    sol = solve_disk(m, trace, 32)
    x = np.array([3.0, 3.4, 2.7])
    y = np.array([0.0, -0.5, 0.6])
    return float(np.max(np.abs(evaluate_many(sol, x, y) - exact(x, y)))), "u = y in circle((3, 0), 1), n_max = 32"


def _annulus_solve(m: complex, rng: np.random.Generator) -> tuple[float, str]:
    exact = reference_solution(ReferenceKind.LINEAR_Y, m)
    J = sample_count(32)
    sol = solve_annulus(m, trace_from_field(exact, 0.5, 1.0, J), trace_from_field(exact, 1.0, 1.0, J), 32)
    x, y = bipolar_to_cartesian(np.array([0.62, 0.75, 0.88]), np.array([0.3, 2.0, 4.5]), 1.0)
    return float(np.max(np.abs(evaluate_many(sol, x, y) - exact(x, y)))), "u = y between tau = 0.5 and 1, n_max = 32"


def _gram_det(m: complex, rng: np.random.Generator) -> tuple[float, str]:
    block = gram_block(m, 3, 0.5, 1.0)
    return abs(block.det - abs(1.0 - block.q_ratio * block.p_ratio) ** 2), "M_3 on [0.5, 1]"


# Exports _________________________________________________________________________________________

INVARIANT_CHECKS: dict[str, tuple[float, Check]] = {
    "weinstein-principle": (1e-4, _principle),
    "conjugation": (1e-4, _conjugation),
    "kernel-equation-source": (1e-4, _kernel_source),
    "kernel-equation-field-point": (1e-4, _kernel_field_point),
    "kernel-branch-relation": (1e-9, _branch_relation),
    "legendre-whipple": (1e-8, _whipple),
    "poisson-constant": (1e-9, _poisson_constant),
    "mean-value": (1e-8, _mean_value),
    "disk-solver": (1e-6, _disk_solve),
    "annulus-solver": (1e-6, _annulus_solve),
    "gram-determinant": (1e-10, _gram_det),
}


def run_invariant_suite(m: complex, seed: int = SUITE_SEED) -> list[InvariantCheck]:
    """
    Run every check that applies to m. Checks whose inputs m rules out (the Poisson constant
    for Re m >= 1, the mean-value formula for non-integer m, Legendre orders outside the
    supported range) are skipped; a numerical breakdown counts as a failure.
    Returns:
        list[InvariantCheck]: Results in suite order.
    """
    m = complex(m)
    results: list[InvariantCheck] = []
    for name, (tolerance, check) in INVARIANT_CHECKS.items():
        rng = np.random.default_rng(seed)
        try:
            residual, detail = check(m, rng)
        except AxipotInputError as e:
            logger.info("skipping %s for m=%s: %s", name, m, e)
            continue
        except AxipotNumericalError as e:
            logger.warning("%s broke down for m=%s: %s", name, m, e)
            residual, detail = math.inf, str(e)
        results.append(InvariantCheck.judge(name, residual, tolerance, detail))
        logger.debug("%s: residual %.2e", name, residual)
    return results
