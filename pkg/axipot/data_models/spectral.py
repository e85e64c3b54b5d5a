"""
axipot/data_models/spectral.py

Boundary traces on bipolar level circles and the Fourier-Legendre series solutions built from them.

Contains:
- SolutionKind: Enum (disk, exterior, annulus)
- BoundaryTrace: Samples of u on the circle tau = const at theta_j = 2*pi*j/J
- FourierLegendreSolution: Mode coefficients plus the geometry they refer to
"""

from enum import StrEnum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class SolutionKind(StrEnum):
    """Region a series solution lives on."""
    DISK = "disk"
    EXTERIOR = "exterior"
    ANNULUS = "annulus"


class BoundaryTrace(BaseModel):
    """
    u sampled on the level circle tau at theta_j = 2*pi*j/J, J a power of two.

    Fields:
        tau (float): Level of the circle, > 0
        alpha (float): Pole abscissa of the bipolar chart
        values (np.ndarray): u(tau, theta_j)
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    tau: float = Field(..., gt=0, description="Level of the circle")
    alpha: float = Field(..., gt=0, description="Pole abscissa of the bipolar chart")
    values: np.ndarray = Field(..., description="u(tau, theta_j)")

    @field_validator("values", mode="before")
    @classmethod
    def as_complex_array(cls, value: object) -> np.ndarray:
        """Store samples as a 1-D complex array."""
        return np.asarray(value, dtype=complex).reshape(-1)

    @field_validator("values")
    @classmethod
    def check_power_of_two(cls, value: np.ndarray) -> np.ndarray:
        """The sample count is a power of two."""
        n = len(value)
        if n < 1 or n & (n - 1):
            raise ValueError(f"trace needs a power-of-two sample count, got {n}")
        return value

    @property
    def size(self) -> int:
        """J."""
        return len(self.values)

    @property
    def angles(self) -> np.ndarray:
        """theta_j = 2*pi*j/J."""
        return 2.0 * np.pi * np.arange(self.size) / self.size


class FourierLegendreSolution(BaseModel):
    """
    u = prefactor(tau, theta) * sum_n [a_n Q_n(tau)/Q_n(tau0) + b_n P_n(tau)/P_n(tau_P)] e^(in theta),
    with Q_n, P_n of degree n - 1/2 and order (m-1)/2, and tau_P = tau1 for an annulus, tau0 otherwise.
    A disk (tau >= tau0) carries only a_n, an exterior (tau <= tau0) only b_n, an annulus
    (tau0 <= tau <= tau1) both.

    Fields:
        m (complex): Weinstein parameter
        alpha (float): Pole abscissa
        kind (SolutionKind): Region
        tau0 (float): Data circle (outer circle of an annulus)
        tau1 (float | None): Inner circle of an annulus
        q_coeffs (dict[int, complex]): a_n
        p_coeffs (dict[int, complex]): b_n
        n_max (int): Truncation, |n| <= n_max
    """

    model_config = ConfigDict(frozen=True)

    m: complex = Field(..., description="Weinstein parameter")
    alpha: float = Field(..., gt=0, description="Pole abscissa")
    kind: SolutionKind = Field(..., description="Region")
    tau0: float = Field(..., gt=0, description="Data circle (outer circle of an annulus)")
    tau1: float | None = Field(default=None, description="Inner circle of an annulus")
    q_coeffs: dict[int, complex] = Field(default_factory=dict, description="a_n")
    p_coeffs: dict[int, complex] = Field(default_factory=dict, description="b_n")
    n_max: int = Field(..., ge=0, description="Truncation")

    @model_validator(mode="after")
    def check_layout(self) -> "FourierLegendreSolution":
        """Coefficient families and levels match the kind; every index is within n_max."""
        match self.kind:
            case SolutionKind.DISK:
                if self.p_coeffs:
                    raise ValueError("a disk solution carries no P coefficients")
            case SolutionKind.EXTERIOR:
                if self.q_coeffs:
                    raise ValueError("an exterior solution carries no Q coefficients")
            case SolutionKind.ANNULUS:
                if self.tau1 is None or not self.tau1 > self.tau0:
                    raise ValueError(f"an annulus needs tau1 > tau0, got tau0={self.tau0}, tau1={self.tau1}")
        if self.kind is not SolutionKind.ANNULUS and self.tau1 is not None:
            raise ValueError(f"tau1 is only meaningful for an annulus, got kind={self.kind}")
        for n in (*self.q_coeffs, *self.p_coeffs):
            if abs(n) > self.n_max:
                raise ValueError(f"mode {n} exceeds n_max={self.n_max}")
        return self

    @property
    def p_reference(self) -> float:
        """Level at which the P terms are normalized."""
        return self.tau1 if self.kind is SolutionKind.ANNULUS else self.tau0

    def contains(self, tau: np.ndarray, slack: float = 1e-9) -> np.ndarray:
        """Whether each tau lies on the closed region, up to slack."""
        tau = np.asarray(tau, dtype=float)
        match self.kind:
            case SolutionKind.DISK:
                return tau >= self.tau0 - slack
            case SolutionKind.EXTERIOR:
                return (tau > 0.0) & (tau <= self.tau0 + slack)
            case SolutionKind.ANNULUS:
                return (tau >= self.tau0 - slack) & (tau <= self.tau1 + slack)

    def scale(self) -> float:
        """Largest coefficient modulus, 0 for the zero solution."""
        magnitudes = [abs(c) for c in (*self.q_coeffs.values(), *self.p_coeffs.values())]
        return max(magnitudes, default=0.0)

