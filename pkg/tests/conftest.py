from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from octoline.invariants.determinant import reference_rho
from octoline.models import Rho

EXAMPLES = Path(__file__).resolve().parents[1] / "data" / "examples"


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def rho0() -> Rho:
    return reference_rho()


@pytest.fixture
def examples_dir() -> Path:
    return EXAMPLES
