"""
axipot/data_models/weinstein.py

Parameters and fields of the Weinstein equation L_m u = u_xx + u_yy + (m/x) u_x = 0.

Contains:
- KernelBranch: Enum (re_m_lt_1, re_m_ge_1)
- AngleConvention: Enum (from_y_axis, from_x_axis, axial) for the mean-value check
- ReferenceKind: Enum (constant, linear_y, quadratic, power)
- ScalarField: Protocol for vectorized complex fields f(x, y)
- WeinsteinParam: m with its Legendre order mu = (m-1)/2 and kernel branch
- ReferenceSolution: Closed-form solutions of L_m u = 0 with analytic gradients
- SmoothField: Random polynomial/trigonometric test field
"""

from enum import StrEnum
from typing import Protocol

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, computed_field


class KernelBranch(StrEnum):
    """Which integral formula the fundamental solution uses."""
    RE_M_LT_1 = "re_m_lt_1"
    RE_M_GE_1 = "re_m_ge_1"


class AngleConvention(StrEnum):
    """Parametrization of the half-circle in the mean-value formula."""
    FROM_Y_AXIS = "from_y_axis"  # (r sin t, r cos t)
    FROM_X_AXIS = "from_x_axis"  # (r cos t, r sin t)
    AXIAL = "axial"  # (r sin t, r cos t) for t in (0, pi)


class ReferenceKind(StrEnum):
    """Manufactured exact solutions."""
    CONSTANT = "constant"
    LINEAR_Y = "linear_y"
    QUADRATIC = "quadratic"
    POWER = "power"


class ScalarField(Protocol):
    """A complex field evaluated on broadcastable coordinate arrays."""

    def __call__(self, x: np.ndarray, y: np.ndarray) -> np.ndarray: ...


class WeinsteinParam(BaseModel):
    """
    The complex parameter m of the Weinstein operator.

    Fields:
        m (complex): Operator parameter
        mu (complex): Legendre order (m - 1)/2 (computed)
        branch (KernelBranch): re_m_lt_1 exactly when Re m < 1 (computed)
    """

    model_config = ConfigDict(frozen=True)

    m: complex = Field(..., description="Operator parameter")

    @computed_field  # type: ignore[prop-decorator]
    @property
    def mu(self) -> complex:
        """Legendre order (m - 1)/2."""
        return (self.m - 1.0) / 2.0

    @computed_field  # type: ignore[prop-decorator]
    @property
    def branch(self) -> KernelBranch:
        """Kernel branch selected by Re m."""
        return KernelBranch.RE_M_LT_1 if self.m.real < 1.0 else KernelBranch.RE_M_GE_1


class ReferenceSolution(BaseModel):
    """
    A closed-form solution of L_m u = 0:
    constant u = 1, linear_y u = y, quadratic u = x^2 - (m+1) y^2, power u = x^(1-m).

    Fields:
        kind (ReferenceKind): Which solution
        m (complex): Operator parameter
    """

    model_config = ConfigDict(frozen=True)

    kind: ReferenceKind = Field(..., description="Which solution")
    m: complex = Field(..., description="Operator parameter")

    def value(self, x: np.ndarray | float, y: np.ndarray | float) -> np.ndarray:
        """u(x, y)."""
        x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
        match self.kind:
            case ReferenceKind.CONSTANT:
                return np.ones(x.shape, dtype=complex)
            case ReferenceKind.LINEAR_Y:
                return y.astype(complex)
            case ReferenceKind.QUADRATIC:
                return x * x - (self.m + 1.0) * y * y
            case ReferenceKind.POWER:
                return np.exp((1.0 - self.m) * np.log(x))

    def gradient(self, x: np.ndarray | float, y: np.ndarray | float) -> tuple[np.ndarray, np.ndarray]:
        """(u_x, u_y)."""
        x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
        zero = np.zeros(x.shape, dtype=complex)
        match self.kind:
            case ReferenceKind.CONSTANT:
                return zero, zero
            case ReferenceKind.LINEAR_Y:
                return zero, np.ones(x.shape, dtype=complex)
            case ReferenceKind.QUADRATIC:
                return (2.0 * x).astype(complex), -2.0 * (self.m + 1.0) * y
            case ReferenceKind.POWER:
                return (1.0 - self.m) * np.exp(-self.m * np.log(x)), zero

    def __call__(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self.value(x, y)


class SmoothField(BaseModel):
    """
    f = c0 x^2 y + c1 y^3 + c2 x^3 + c3 exp(k x) cos(k y) + c4 sin(w0 x + w1 y),
    a smooth test field for operator identities.

    Fields:
        coefficients (list[complex]): c0..c4
        k (float): Exponential rate
        w (tuple[float, float]): Wave vector of the sine term
    """

    model_config = ConfigDict(frozen=True)

    coefficients: list[complex] = Field(..., min_length=5, max_length=5, description="c0..c4")
    k: float = Field(..., description="Exponential rate")
    w: tuple[float, float] = Field(..., description="Wave vector of the sine term")

    def __call__(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        c = self.coefficients
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        return (
            c[0] * x * x * y
            + c[1] * y ** 3
            + c[2] * x ** 3
            + c[3] * np.exp(self.k * x) * np.cos(self.k * y)
            + c[4] * np.sin(self.w[0] * x + self.w[1] * y)
        )
