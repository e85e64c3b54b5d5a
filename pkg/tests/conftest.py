"""
tests/conftest.py

Shared fixtures: the stored input files and a seeded generator for randomized sweeps.
"""

from pathlib import Path

import numpy as np
import pytest

INPUT_DATA = Path(__file__).parent.resolve() / "data" / "input"
SWEEP_SEED = 20240607


@pytest.fixture(scope="session")
def input_data_dir() -> Path:
    """tests/data/input: sampled traces under traces/, JSON option files under configs/."""
    if not INPUT_DATA.is_dir():
        pytest.fail(f"missing test inputs: {INPUT_DATA}")
    return INPUT_DATA


@pytest.fixture
def rng() -> np.random.Generator:
    """A fresh generator per test, so sweeps do not depend on test order."""
    return np.random.default_rng(SWEEP_SEED)
