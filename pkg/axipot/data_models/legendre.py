"""
axipot/data_models/legendre.py

Associated Legendre function evaluations at cosh(tau) > 1.

Contains:
- LegendreKind: Enum (P, Q)
- LegendreMethod: Enum (integral-P2, integral-Q, recursion, whipple, asymptotic)
- LegendreEval: Value with provenance, error estimate and an overflow-free scaled form
"""

import cmath
from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field


class LegendreKind(StrEnum):
    """First (P) or second (Q) kind."""
    P = "P"
    Q = "Q"


class LegendreMethod(StrEnum):
    """Which representation produced a value."""
    INTEGRAL_P2 = "integral-P2"
    INTEGRAL_Q = "integral-Q"
    RECURSION = "recursion"
    WHIPPLE = "whipple"
    ASYMPTOTIC = "asymptotic"


class LegendreEval(BaseModel):
    """
    One evaluation of P_nu^mu(cosh tau) or Q_nu^mu(cosh tau).

    value = mantissa * exp(log_scale). Ratios of two evaluations should be formed from
    mantissas and log-scales; value itself may overflow for large degrees.

    Fields:
        value (complex): Function value (inf when it overflows)
        method (LegendreMethod): Representation used
        est_error (float): Estimated relative error, >= 0
        mantissa (complex): Scaled value
        log_scale (float): Real exponent of the scale factor
    """

    model_config = ConfigDict(frozen=True)

    value: complex = Field(..., description="Function value")
    method: LegendreMethod = Field(..., description="Representation used")
    est_error: float = Field(default=0.0, ge=0, description="Estimated relative error")
    mantissa: complex = Field(..., description="Scaled value")
    log_scale: float = Field(default=0.0, description="Real exponent of the scale factor")

    @classmethod
    def from_scaled(
        cls,
        mantissa: complex,
        log_scale: float,
        method: LegendreMethod,
        est_error: float = 0.0,
    ) -> "LegendreEval":
        """Build an evaluation from its scaled form."""
        try:
            value = mantissa * cmath.exp(log_scale)
        except OverflowError:
            value = complex(float("inf"), 0.0)
        return cls(
            value=value,
            method=method,
            est_error=est_error,
            mantissa=mantissa,
            log_scale=log_scale,
        )

    def ratio_to(self, other: "LegendreEval") -> complex:
        """self / other without forming either value."""
        return self.mantissa / other.mantissa * cmath.exp(self.log_scale - other.log_scale)
