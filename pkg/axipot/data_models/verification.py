"""
axipot/data_models/verification.py

Results of the invariant suite.

Contains:
- InvariantCheck: One named residual against its tolerance
"""

import math

from pydantic import BaseModel, ConfigDict, Field, model_validator


class InvariantCheck(BaseModel):
    """
    One identity evaluated numerically.

    Fields:
        name (str): Check identifier
        residual (float): Measured residual (inf when the computation broke down)
        tolerance (float): Largest accepted residual
        passed (bool): residual <= tolerance
        detail (str): What was evaluated, or why it failed
    """

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., description="Check identifier")
    residual: float = Field(..., ge=0, description="Measured residual")
    tolerance: float = Field(..., gt=0, description="Largest accepted residual")
    passed: bool = Field(..., description="residual <= tolerance")
    detail: str = Field(default="", description="What was evaluated, or why it failed")

    @model_validator(mode="after")
    def check_verdict(self) -> "InvariantCheck":
        """passed agrees with the residual."""
        if self.passed != (self.residual <= self.tolerance):
            raise ValueError(f"check {self.name}: passed={self.passed} contradicts residual {self.residual}")
        return self

    @classmethod
    def judge(cls, name: str, residual: float, tolerance: float, detail: str = "") -> "InvariantCheck":
        """Build a check and decide it."""
        residual = float(residual)
        if math.isnan(residual):
            residual = math.inf
        return cls(name=name, residual=residual, tolerance=tolerance, passed=residual <= tolerance, detail=detail)
