"""
axipot - generalized axisymmetric potentials.

Usage:
    from axipot import disk_geometry, evaluate, reference_solution, sample_count, solve_disk, trace_from_field
    from axipot.data_models.geometry import CartesianPoint

    geometry = disk_geometry(5.0, 3.0)
    exact = reference_solution("quadratic", 2.0)
    trace = trace_from_field(exact, geometry.tau0, geometry.alpha, sample_count(32))
    solution = solve_disk(2.0, trace, 32)
    value = evaluate(solution, CartesianPoint(x=5.0, y=0.2))
"""

__version__ = "0.1.0"

# Public API
from .numerics.bipolar import annulus_geometry, disk_geometry
from .potentials.halfplane import poisson_field, poisson_solve
from .potentials.kernels import fundamental_E, fundamental_F, kernel_values
from .potentials.riesz import frame_bounds, gram_block, gram_sweep
from .potentials.spectral import (
    decompose,
    evaluate,
    evaluate_many,
    sample_count,
    solve_annulus,
    solve_disk,
    solve_exterior,
    trace_from_field,
)
from .potentials.weinstein import reference_solution

__all__ = [
    "annulus_geometry",
    "decompose",
    "disk_geometry",
    "evaluate",
    "evaluate_many",
    "frame_bounds",
    "fundamental_E",
    "fundamental_F",
    "gram_block",
    "gram_sweep",
    "kernel_values",
    "poisson_field",
    "poisson_solve",
    "reference_solution",
    "sample_count",
    "solve_annulus",
    "solve_disk",
    "solve_exterior",
    "trace_from_field",
]
