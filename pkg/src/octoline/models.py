from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Literal, Union

import numpy as np
from numpy.typing import NDArray

from octoline.errors import ChiralityError, PreconditionError

# 八元数、R⁸ 向量与旋量的坐标统一用长度 8 的 float64 数组表示
Octonion = NDArray[np.float64]
Vector8 = NDArray[np.float64]

Chirality = Literal["+", "-"]
Duality = Literal["primal", "dual"]

PLUS: Chirality = "+"
MINUS: Chirality = "-"
PRIMAL: Duality = "primal"
DUAL: Duality = "dual"


def as_oct(values: Any) -> Octonion:
    arr = np.asarray(values, dtype=np.float64).reshape(-1)
    if arr.shape != (8,):
        raise PreconditionError(f"需要 8 个实数坐标，实际为 {arr.shape}")
    return arr


@dataclass(slots=True, frozen=True)
class Spinor:
    chirality: Chirality
    coords: Octonion

    def __post_init__(self) -> None:
        if self.chirality not in (PLUS, MINUS):
            raise ChiralityError(f"未知手性: {self.chirality}")
        object.__setattr__(self, "coords", as_oct(self.coords))

    def norm(self) -> float:
        return float(np.linalg.norm(self.coords))

    def scaled(self, t: float) -> Spinor:
        return Spinor(self.chirality, t * self.coords)

    def __add__(self, other: Spinor) -> Spinor:
        if other.chirality != self.chirality:
            raise ChiralityError(f"不同手性的旋量不能相加: {self.chirality} / {other.chirality}")
        return Spinor(self.chirality, self.coords + other.coords)

    def __neg__(self) -> Spinor:
        return Spinor(self.chirality, -self.coords)

    def __sub__(self, other: Spinor) -> Spinor:
        return self + (-other)


@dataclass(slots=True, frozen=True)
class Twistor:
    """ψ = x·φ⁻ + φ⁺；primal 时 φ⁻∈S⁻, φ⁺∈S⁺，dual 时手性互换。"""

    duality: Duality
    phi_minus: Spinor
    phi_plus: Spinor

    def __post_init__(self) -> None:
        if self.duality not in (PRIMAL, DUAL):
            raise ChiralityError(f"未知对偶标记: {self.duality}")
        want = (MINUS, PLUS) if self.duality == PRIMAL else (PLUS, MINUS)
        got = (self.phi_minus.chirality, self.phi_plus.chirality)
        if got != want:
            raise ChiralityError(f"{self.duality} 扭量的手性应为 {want}，实际为 {got}")

    @classmethod
    def from_array(cls, arr: Any, duality: Duality = PRIMAL) -> Twistor:
        a = np.asarray(arr, dtype=np.float64).reshape(2, 8)
        minus_ch, plus_ch = (MINUS, PLUS) if duality == PRIMAL else (PLUS, MINUS)
        return cls(duality, Spinor(minus_ch, a[0]), Spinor(plus_ch, a[1]))

    @classmethod
    def primal(cls, phi_minus: Any, phi_plus: Any) -> Twistor:
        return cls(PRIMAL, Spinor(MINUS, phi_minus), Spinor(PLUS, phi_plus))

    def as_array(self) -> NDArray[np.float64]:
        return np.stack([self.phi_minus.coords, self.phi_plus.coords])

    def scaled(self, t: float) -> Twistor:
        return Twistor(self.duality, self.phi_minus.scaled(t), self.phi_plus.scaled(t))

    def __add__(self, other: Twistor) -> Twistor:
        if other.duality != self.duality:
            raise ChiralityError("primal 与 dual 扭量不能相加")
        return Twistor(self.duality, self.phi_minus + other.phi_minus, self.phi_plus + other.phi_plus)

    def __neg__(self) -> Twistor:
        return self.scaled(-1.0)

    def __sub__(self, other: Twistor) -> Twistor:
        return self + (-other)

    def is_zero(self) -> bool:
        return not np.any(self.as_array())


@dataclass(slots=True, frozen=True)
class LorentzVector:
    """f = a‖x‖² + (x,b) + c。"""

    a: float
    b: Vector8
    c: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", as_oct(self.b))
        object.__setattr__(self, "c", float(self.c))

    @classmethod
    def from_array(cls, arr: Any) -> LorentzVector:
        v = np.asarray(arr, dtype=np.float64).reshape(10)
        return cls(v[0], v[1:9], v[9])

    def as_array(self) -> NDArray[np.float64]:
        return np.concatenate([[self.a], self.b, [self.c]])

    def scaled(self, t: float) -> LorentzVector:
        return LorentzVector(t * self.a, t * self.b, t * self.c)

    def __add__(self, other: LorentzVector) -> LorentzVector:
        return LorentzVector(self.a + other.a, self.b + other.b, self.c + other.c)

    def __sub__(self, other: LorentzVector) -> LorentzVector:
        return self + other.scaled(-1.0)

    def norm(self) -> float:
        return float(np.linalg.norm(self.as_array()))


@dataclass(slots=True, frozen=True)
class Translation:
    t: Vector8
    orientation_reversing = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "t", as_oct(self.t))


@dataclass(slots=True, frozen=True)
class Reflection:
    n: Vector8
    orientation_reversing = True

    def __post_init__(self) -> None:
        n = as_oct(self.n)
        if abs(float(np.dot(n, n)) - 1.0) > 1e-9:
            raise PreconditionError(f"反射法向量必须是单位向量，|n|²={float(np.dot(n, n))}")
        object.__setattr__(self, "n", n)


@dataclass(slots=True, frozen=True)
class Inversion:
    orientation_reversing = True


@dataclass(slots=True, frozen=True)
class Dilation:
    lam: float
    orientation_reversing = False

    def __post_init__(self) -> None:
        lam = float(self.lam)
        if not lam > 0:
            raise PreconditionError(f"伸缩参数必须为正数，实际为 {lam}")
        object.__setattr__(self, "lam", lam)


ConformalGenerator = Union[Translation, Reflection, Inversion, Dilation]


@dataclass(slots=True, frozen=True)
class ConformalWord:
    generators: tuple[ConformalGenerator, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))

    @property
    def parity(self) -> int:
        return sum(1 for g in self.generators if g.orientation_reversing) % 2

    def __len__(self) -> int:
        return len(self.generators)

    def __add__(self, other: ConformalWord) -> ConformalWord:
        return ConformalWord(self.generators + other.generators)


@dataclass(slots=True, frozen=True)
class Rho:
    """ρ = (ψ₁, ψ₂)，即八元数 2×2 矩阵 [[φ₁⁻, φ₁⁺], [φ₂⁻, φ₂⁺]]。"""

    psi1: Twistor
    psi2: Twistor

    def __post_init__(self) -> None:
        if self.psi1.duality != self.psi2.duality:
            raise ChiralityError("ρ 的两个扭量必须同为 primal 或同为 dual")

    @property
    def duality(self) -> Duality:
        return self.psi1.duality

    @property
    def is_primal(self) -> bool:
        return self.duality == PRIMAL

    @classmethod
    def from_array(cls, arr: Any, duality: Duality = PRIMAL) -> Rho:
        a = np.asarray(arr, dtype=np.float64).reshape(4, 8)
        return cls(Twistor.from_array(a[:2], duality), Twistor.from_array(a[2:], duality))

    def as_array(self) -> NDArray[np.float64]:
        return np.concatenate([self.psi1.as_array(), self.psi2.as_array()])

    def as_vector(self) -> NDArray[np.float64]:
        return self.as_array().reshape(32)

    def scaled(self, t: float) -> Rho:
        return Rho(self.psi1.scaled(t), self.psi2.scaled(t))

    def __add__(self, other: Rho) -> Rho:
        return Rho(self.psi1 + other.psi1, self.psi2 + other.psi2)

    def norm(self) -> float:
        return float(np.linalg.norm(self.as_array()))


@dataclass(slots=True, frozen=True)
class OctMatrix2:
    """ρ₀ 处的切向量 A = [[a, b], [c, d]]，坐标顺序与 Rho.as_vector 一致。"""

    a: Octonion
    b: Octonion
    c: Octonion
    d: Octonion

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, as_oct(getattr(self, name)))

    @classmethod
    def from_vector(cls, vec: Any) -> OctMatrix2:
        v = np.asarray(vec, dtype=np.float64).reshape(4, 8)
        return cls(v[0], v[1], v[2], v[3])

    def as_vector(self) -> NDArray[np.float64]:
        return np.concatenate([self.a, self.b, self.c, self.d])

    def is_trace_imaginary(self, tol: float = 1e-12) -> bool:
        return abs(self.a[0] + self.d[0]) <= tol

    def is_skew_type(self, tol: float = 1e-12) -> bool:
        conj_c = self.c * np.array([1.0] + [-1.0] * 7)
        return (
            abs(self.a[0]) <= tol
            and abs(self.d[0]) <= tol
            and bool(np.all(np.abs(self.b + conj_c) <= tol))
        )


@dataclass(slots=True, frozen=True)
class QuaternionSubalgebra:
    basis: tuple[Octonion, Octonion, Octonion, Octonion]

    def matrix(self) -> NDArray[np.float64]:
        return np.stack(self.basis)


@dataclass(slots=True, frozen=True)
class PointS8:
    """S⁸ 上的点：零模 Lorentz 射线，存储时归一化为 a + c = 1。"""

    ray: LorentzVector

    @property
    def is_infinity(self) -> bool:
        return abs(self.ray.a) <= 1e-12 * max(1.0, abs(self.ray.c))

    def finite_point(self) -> Vector8:
        # (1, -2p, |p|²) 的射线对应 R⁸ 中的点 p
        return -self.ray.b / (2.0 * self.ray.a)


@dataclass(slots=True, frozen=True)
class QMat2:
    """四元数 2×2 矩阵，entries 的四行依次为 a, b, c, d（行优先）。"""

    entries: NDArray[np.float64]

    def __post_init__(self) -> None:
        arr = np.asarray(self.entries, dtype=np.float64).reshape(4, 4)
        object.__setattr__(self, "entries", arr)

    @property
    def a(self) -> NDArray[np.float64]:
        return self.entries[0]

    @property
    def b(self) -> NDArray[np.float64]:
        return self.entries[1]

    @property
    def c(self) -> NDArray[np.float64]:
        return self.entries[2]

    @property
    def d(self) -> NDArray[np.float64]:
        return self.entries[3]


@dataclass(slots=True)
class SuiteReport:
    suite: str
    samples: int
    max_residual: float
    tolerance: float
    seed: int
    wall_time: float = 0.0
    detail: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.max_residual <= self.tolerance)

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "samples": self.samples,
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "seed": self.seed,
            "wall_time": round(self.wall_time, 4),
            "detail": self.detail,
        }


@dataclass(slots=True, frozen=True)
class NormalForm:
    """normalize 的结果：rho = act_rho(word, 原始 ρ)·p。"""

    word: ConformalWord
    p: NDArray[np.float64]
    rho: Rho
