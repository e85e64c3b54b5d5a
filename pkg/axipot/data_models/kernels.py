"""
axipot/data_models/kernels.py

Inputs and outputs of the fundamental-solution kernels.

Contains:
- ThetaFamily: Enum (base, sin2_weight, power_plus_1)
- KernelVariable: Enum (source, field_point), the point that varies in a kernel field
- KernelPair: source (x, y) and field point (xi, eta)
- KernelValues: E_m over arrays with optional (d_xi, d_eta)
- DifferentiableField: Protocol for fields with an analytic gradient
- CircleTrace: u, u_xi, u_eta sampled at uniform angles on a circle
"""

import math
from enum import StrEnum
from typing import NamedTuple, Protocol

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from axipot.data_models.geometry import CartesianPoint


class ThetaFamily(StrEnum):
    """The three angular integrals behind the singularity estimates."""
    BASE = "base"
    SIN2_WEIGHT = "sin2_weight"
    POWER_PLUS_1 = "power_plus_1"


class KernelVariable(StrEnum):
    """Which point of the pair is the field variable."""
    SOURCE = "source"
    FIELD_POINT = "field_point"


class KernelPair(BaseModel):
    """
    A pair of points for E_m(x, y, xi, eta).

    Fields:
        source (CartesianPoint): (x, y)
        field_point (CartesianPoint): (xi, eta)
    """

    model_config = ConfigDict(frozen=True)

    source: CartesianPoint = Field(..., description="(x, y)")
    field_point: CartesianPoint = Field(..., description="(xi, eta)")

    @property
    def distance(self) -> float:
        """Euclidean distance d."""
        return math.hypot(self.source.x - self.field_point.x, self.source.y - self.field_point.y)

    @property
    def k(self) -> float:
        """4 x xi / d^2."""
        return 4.0 * self.source.x * self.field_point.x / self.distance ** 2

    def swapped(self) -> "KernelPair":
        """The pair with source and field point exchanged."""
        return KernelPair(source=self.field_point, field_point=self.source)


class KernelValues(NamedTuple):
    """E_m and, when requested, its derivatives in xi and eta."""
    value: np.ndarray
    d_xi: np.ndarray | None = None
    d_eta: np.ndarray | None = None


class DifferentiableField(Protocol):
    """A field exposing value(x, y) and gradient(x, y)."""

    def value(self, x: np.ndarray, y: np.ndarray) -> np.ndarray: ...

    def gradient(self, x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]: ...


class CircleTrace(BaseModel):
    """
    Boundary data on the circle of given center and radius, sampled at
    phi_j = 2*pi*j/J with outward normal (cos phi_j, sin phi_j).

    Fields:
        center (CartesianPoint): Circle center
        radius (float): Circle radius
        values (np.ndarray): u at the samples
        d_xi (np.ndarray): du/dxi at the samples
        d_eta (np.ndarray): du/deta at the samples
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    center: CartesianPoint = Field(..., description="Circle center")
    radius: float = Field(..., gt=0, description="Circle radius")
    values: np.ndarray = Field(..., description="u at the samples")
    d_xi: np.ndarray = Field(..., description="du/dxi at the samples")
    d_eta: np.ndarray = Field(..., description="du/deta at the samples")

    @field_validator("values", "d_xi", "d_eta", mode="before")
    @classmethod
    def as_complex_array(cls, value: object) -> np.ndarray:
        """Store samples as 1-D complex arrays."""
        return np.asarray(value, dtype=complex).reshape(-1)

    @model_validator(mode="after")
    def check_lengths(self) -> "CircleTrace":
        """All sample arrays share one length of at least 3."""
        n = len(self.values)
        if n < 3 or len(self.d_xi) != n or len(self.d_eta) != n:
            raise ValueError("values, d_xi and d_eta need one common length >= 3")
        return self

    @property
    def angles(self) -> np.ndarray:
        """phi_j = 2*pi*j/J."""
        return 2.0 * np.pi * np.arange(len(self.values)) / len(self.values)

    @property
    def points(self) -> tuple[np.ndarray, np.ndarray]:
        """(xi_j, eta_j) on the circle."""
        phi = self.angles
        return self.center.x + self.radius * np.cos(phi), self.center.y + self.radius * np.sin(phi)
