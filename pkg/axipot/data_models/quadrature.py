"""
axipot/data_models/quadrature.py

Quadrature configuration.

Contains:
- EndpointMode: Enum (regular, algebraic-singularity)
- QuadratureConfig: Tolerances, refinement depth and endpoint handling
"""

from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field

from axipot.config import Config


class EndpointMode(StrEnum):
    """How the integrand behaves at the interval ends."""
    REGULAR = "regular"
    ALGEBRAIC_SINGULARITY = "algebraic-singularity"


class QuadratureConfig(BaseModel):
    """
    Quadrature settings shared by every integral in the package.

    Fields:
        abs_tol (float): Absolute error target
        rel_tol (float): Relative error target
        max_depth (int): Refinement budget (subdivisions for adaptive Gauss-Kronrod,
            halving levels for the double-exponential rule, capped internally)
        endpoint_mode (EndpointMode): Regular integrand or algebraic endpoint singularity
    """

    model_config = ConfigDict(frozen=True)

    abs_tol: float = Field(
        default_factory=lambda: Config.QUAD_ABS_TOL,
        gt=0,
        description="Absolute error target",
    )
    rel_tol: float = Field(
        default_factory=lambda: Config.QUAD_REL_TOL,
        gt=0,
        description="Relative error target",
    )
    max_depth: int = Field(
        default_factory=lambda: Config.QUAD_MAX_DEPTH,
        ge=1,
        description="Refinement budget",
    )
    endpoint_mode: EndpointMode = Field(
        default=EndpointMode.REGULAR,
        description="Regular integrand or algebraic endpoint singularity",
    )

    def singular(self) -> "QuadratureConfig":
        """Return a copy flagged for algebraic endpoint singularities."""
        return self.model_copy(update={"endpoint_mode": EndpointMode.ALGEBRAIC_SINGULARITY})

    def scaled(self, magnitude: float) -> "QuadratureConfig":
        """Return a copy whose absolute tolerance is relative to an expected magnitude."""
        return self.model_copy(update={"abs_tol": self.abs_tol * max(magnitude, 1e-300)})
