from __future__ import annotations

from dataclasses import dataclass, field

# 对偶方程 ρ̂ = κ(v⊗ε)ρ 的标定常数，在 (ρ₀, v=(1,0,1)) 处求得
DUALITY_KAPPA = -1.0


@dataclass(slots=True)
class Tolerances:
    lorentz: float = 1e-10
    normalization: float = 1e-8
    zero_eigen_ratio: float = 1e-8
    singular_floor: float = 1e-9
    # |φ⁻| ≤ infinity_ratio·|φ⁺| 时零点视为 ∞
    infinity_ratio: float = 1e-12
    finite_difference_step: float = 1e-5


@dataclass(slots=True)
class SuitePolicy:
    samples: dict[str, int] = field(
        default_factory=lambda: {
            "clifford": 1000,
            "octonion": 1000,
            "lorentz": 1000,
            "identity": 1000,
            "nullity": 1000,
            "invariance": 200,
            "quaternion-oracle": 500,
            "signature": 20,
            "hessian": 1,
            "normalization": 100,
            "duality": 50,
            "derivatives": 50,
        }
    )
    tolerances: dict[str, float] = field(
        default_factory=lambda: {
            "clifford": 1e-12,
            "octonion": 1e-12,
            "lorentz": 1e-10,
            "identity": 1e-10,
            "nullity": 1e-10,
            "invariance": 1e-9,
            "quaternion-oracle": 1e-9,
            "signature": 0.0,
            "hessian": 1e-12,
            "normalization": 1e-8,
            "duality": 1e-8,
            "derivatives": 1e-5,
        }
    )


@dataclass(slots=True)
class DualityPolicy:
    kappa: float = DUALITY_KAPPA
    timelike: tuple[float, float] = (1.0, 1.0)
    spacelike: tuple[float, float] = (-1.0, 1.0)


@dataclass(slots=True)
class AppConfig:
    tolerances: Tolerances = field(default_factory=Tolerances)
    suites: SuitePolicy = field(default_factory=SuitePolicy)
    duality: DualityPolicy = field(default_factory=DualityPolicy)
