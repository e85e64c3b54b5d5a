"""
axipot/data_models/geometry.py

Points and circles of the right half-plane in Cartesian and bipolar charts.

Contains:
- CartesianPoint: (x, y)
- BipolarPoint: (tau, theta) with scale alpha
- DiskGeometry: disk of center (a, 0) and radius R as the level set tau >= tau0
- AnnulusGeometry: region tau0 < tau < tau1 between two nested level circles
"""

import math

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class CartesianPoint(BaseModel):
    """
    A point of the plane; points of the right half-plane have x > 0.

    Fields:
        x (float): Abscissa (distance to the symmetry axis)
        y (float): Ordinate (along the symmetry axis)
    """

    model_config = ConfigDict(frozen=True)

    x: float = Field(..., description="Abscissa (distance to the symmetry axis)")
    y: float = Field(..., description="Ordinate (along the symmetry axis)")

    @property
    def in_half_plane(self) -> bool:
        """Whether the point lies in the open right half-plane."""
        return self.x > 0.0


class BipolarPoint(BaseModel):
    """
    A point in bipolar coordinates with poles (-alpha, 0) and (alpha, 0).

    Fields:
        tau (float): ln(MA/MB); positive on the right half-plane
        theta (float): Angle AMB, reduced into [0, 2*pi)
        alpha (float): Pole abscissa, > 0
    """

    model_config = ConfigDict(frozen=True)

    tau: float = Field(..., description="ln(MA/MB); positive on the right half-plane")
    theta: float = Field(..., description="Angle AMB in [0, 2*pi)")
    alpha: float = Field(..., gt=0, description="Pole abscissa")

    @field_validator("theta")
    @classmethod
    def reduce_theta(cls, value: float) -> float:
        """Reduce theta into [0, 2*pi)."""
        reduced = math.fmod(value, 2.0 * math.pi)
        if reduced < 0.0:
            reduced += 2.0 * math.pi
        # fmod of a value just below 0 can round up to 2*pi
        return 0.0 if reduced >= 2.0 * math.pi else reduced


class DiskGeometry(BaseModel):
    """
    The disk of center (a, 0) and radius R, i.e. the bipolar region tau >= tau0.

    Fields:
        center_a (float): Center abscissa
        radius_R (float): Radius, 0 < R < a
        alpha (float): sqrt(a^2 - R^2)
        tau0 (float): arccosh(a / R)
    """

    model_config = ConfigDict(frozen=True)

    center_a: float = Field(..., description="Center abscissa")
    radius_R: float = Field(..., gt=0, description="Radius")
    alpha: float = Field(..., gt=0, description="sqrt(a^2 - R^2)")
    tau0: float = Field(..., gt=0, description="arccosh(a / R)")

    @model_validator(mode="after")
    def check_consistency(self) -> "DiskGeometry":
        """Check center_a > radius_R and the alpha, tau0 relations."""
        if not self.center_a > self.radius_R:
            raise ValueError(f"center_a ({self.center_a}) must exceed radius_R ({self.radius_R})")
        alpha = math.sqrt((self.center_a - self.radius_R) * (self.center_a + self.radius_R))
        if not math.isclose(self.alpha, alpha, rel_tol=1e-9):
            raise ValueError(f"alpha must be sqrt(a^2 - R^2) = {alpha}, got {self.alpha}")
        if not math.isclose(math.cosh(self.tau0), self.center_a / self.radius_R, rel_tol=1e-9):
            raise ValueError("cosh(tau0) must equal center_a / radius_R")
        return self


class AnnulusGeometry(BaseModel):
    """
    The non-concentric annulus tau0 < tau < tau1 for a common pole abscissa alpha.

    Fields:
        tau0 (float): Outer circle level
        tau1 (float): Inner circle level, > tau0
        alpha (float): Pole abscissa
        outer_center (float), outer_radius (float): Level circle of tau0
        inner_center (float), inner_radius (float): Level circle of tau1
    """

    model_config = ConfigDict(frozen=True)

    tau0: float = Field(..., gt=0, description="Outer circle level")
    tau1: float = Field(..., gt=0, description="Inner circle level")
    alpha: float = Field(..., gt=0, description="Pole abscissa")
    outer_center: float = Field(..., description="Center abscissa of the tau0 circle")
    outer_radius: float = Field(..., gt=0, description="Radius of the tau0 circle")
    inner_center: float = Field(..., description="Center abscissa of the tau1 circle")
    inner_radius: float = Field(..., gt=0, description="Radius of the tau1 circle")

    @model_validator(mode="after")
    def check_order(self) -> "AnnulusGeometry":
        """Require tau0 < tau1."""
        if not self.tau0 < self.tau1:
            raise ValueError(f"tau0 ({self.tau0}) must be below tau1 ({self.tau1})")
        return self

    @property
    def is_nested(self) -> bool:
        """Whether the inner circle lies strictly inside the outer one."""
        return abs(self.outer_center - self.inner_center) + self.inner_radius < self.outer_radius
