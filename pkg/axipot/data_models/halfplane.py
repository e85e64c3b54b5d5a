"""
axipot/data_models/halfplane.py

Boundary data for the half-plane Dirichlet problem.

Contains:
- BoundaryDataKind: Enum (gaussian, lorentzian, constant)
- BoundaryData: Protocol for vectorized data eta -> u(eta)
- NamedBoundaryData: The named data as a callable model
"""

from enum import StrEnum
from typing import Protocol

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class BoundaryDataKind(StrEnum):
    """Named boundary data on the symmetry axis."""
    GAUSSIAN = "gaussian"
    LORENTZIAN = "lorentzian"
    CONSTANT = "constant"


class BoundaryData(Protocol):
    """Bounded continuous data on the axis, evaluated on arrays."""

    def __call__(self, eta: np.ndarray) -> np.ndarray: ...


class NamedBoundaryData(BaseModel):
    """
    exp(-eta^2), 1/(1 + eta^2) or a constant, times an amplitude.

    Fields:
        kind (BoundaryDataKind): Which profile
        amplitude (complex): Multiplier (the constant's value)
    """

    model_config = ConfigDict(frozen=True)

    kind: BoundaryDataKind = Field(..., description="Which profile")
    amplitude: complex = Field(default=1.0, description="Multiplier")

    def __call__(self, eta: np.ndarray) -> np.ndarray:
        eta = np.asarray(eta, dtype=float)
        match self.kind:
            case BoundaryDataKind.GAUSSIAN:
                profile = np.exp(-eta * eta)
            case BoundaryDataKind.LORENTZIAN:
                profile = 1.0 / (1.0 + eta * eta)
            case BoundaryDataKind.CONSTANT:
                profile = np.ones(eta.shape)
        return self.amplitude * profile
