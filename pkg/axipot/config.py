"""
axipot/config.py

Numerical defaults and logging settings, read once from the environment (and a .env file).

Contains:
- Config: class-level settings; AXIPOT_* variables override the numerical defaults
"""

import logging
import os
from typing import Any

from dotenv import load_dotenv

load_dotenv()


def _env_float(name: str, default: float) -> float:
    return float(os.getenv(f"AXIPOT_{name}", repr(default)))


def _env_int(name: str, default: int) -> int:
    return int(os.getenv(f"AXIPOT_{name}", str(default)))


class Config:
    """
    Settings shared by the solvers, the quadrature layer and the command line.
    Unknown LOG_LEVEL names fall back to INFO.
    """

    # logging
    LOG_LEVEL: int = logging.getLevelNamesMapping().get(os.getenv("LOG_LEVEL", "INFO").upper(), logging.INFO)
    LOG_FORMAT: str = os.getenv("LOG_FORMAT", "%(asctime)s %(levelname)-7s %(name)s: %(message)s")
    LOG_DATE_FORMAT: str = os.getenv("LOG_DATE_FORMAT", "%H:%M:%S")

    # quadrature
    QUAD_ABS_TOL: float = _env_float("QUAD_ABS_TOL", 1e-10)
    QUAD_REL_TOL: float = _env_float("QUAD_REL_TOL", 1e-10)
    QUAD_MAX_DEPTH: int = _env_int("QUAD_MAX_DEPTH", 30)

    # finite differences: single stencil, and each level of a nested one
    FD_STEP: float = _env_float("FD_STEP", 1e-4)
    NESTED_FD_STEP: float = _env_float("NESTED_FD_STEP", 1e-3)

    # truncation |n| <= N when a solve is not given one
    SPECTRAL_N_MAX: int = _env_int("SPECTRAL_N_MAX", 32)

    @classmethod
    def as_dict(cls) -> dict[str, Any]:
        """Every UPPERCASE setting by name."""
        return {key: getattr(cls, key) for key in dir(cls) if key.isupper()}
