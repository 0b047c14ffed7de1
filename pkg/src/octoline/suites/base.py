from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any

import numpy as np


@dataclass(slots=True)
class SuiteOutcome:
    max_residual: float
    detail: dict[str, Any] = field(default_factory=dict)


class VerificationSuite(ABC):
    name: str = ""

    @abstractmethod
    def run(self, rng: np.random.Generator, samples: int) -> SuiteOutcome:
        raise NotImplementedError


def rel(residual: float, scale: float) -> float:
    return float(residual) / max(float(scale), 1e-300)


class Tracker:

    def __init__(self) -> None:
        self.checks: dict[str, float] = {}

    def add(self, name: str, value: float) -> None:
        self.checks[name] = max(self.checks.get(name, 0.0), float(value))

    def outcome(self, **extra: Any) -> SuiteOutcome:
        worst = max(self.checks.values()) if self.checks else 0.0
        detail: dict[str, Any] = {"checks": {k: float(f"{v:.6e}") for k, v in self.checks.items()}}
        detail.update(extra)
        return SuiteOutcome(worst, detail)
