# ρ 存为 (4, 8) 数组，行依次为 φ₁⁻, φ₁⁺, φ₂⁻, φ₂⁺

from __future__ import annotations

from itertools import product
from typing import Any, Literal

import numpy as np
from numpy.typing import NDArray

from octoline.algebra.lorentz import LORENTZ_GRAM, clifford_action, lorentz_basis, lorentz_form
from octoline.algebra.octonion import oct_conj, oct_inner, oct_mul, oct_norm2
from octoline.algebra.twistor import bilinear_array, dual_pairing
from octoline.errors import ChiralityError
from octoline.models import LorentzVector, Rho, Twistor

PRouting = Literal["direct", "pairing"]


def rho_array(rho: Rho | Any) -> NDArray[np.float64]:
    if isinstance(rho, Rho):
        return rho.as_array()
    return np.asarray(rho, dtype=np.float64)


def f_ab(psi_a: Twistor, psi_b: Twistor) -> LorentzVector:
    if psi_a.duality != psi_b.duality:
        raise ChiralityError("f_ab 需要两个同类扭量")
    return LorentzVector.from_array(bilinear_array(psi_a.as_array(), psi_b.as_array(), psi_a.duality))


def q_map(psi: Twistor) -> LorentzVector:
    return f_ab(psi, psi)


def _p_by_pairing(psi1: Twistor, psi2: Twistor) -> LorentzVector:
    # L(P, vᵢ) = ⟨vᵢ·ψ₁, ψ₂⟩ 对 Lorentz 基逐一成立
    rhs = np.array([dual_pairing(clifford_action(v, psi1), psi2) for v in lorentz_basis()])
    return LorentzVector.from_array(np.linalg.solve(LORENTZ_GRAM, rhs))


def p_map(psi1: Twistor, psi2: Twistor, route: PRouting = "direct") -> LorentzVector:
    if route == "pairing":
        return _p_by_pairing(psi1, psi2)
    return f_ab(psi1, psi2)


def det_array(rho: Any) -> NDArray[np.float64] | float:
    """‖φ₁⁻‖²‖φ₂⁺‖² + ‖φ₂⁻‖²‖φ₁⁺‖² − 2⟨w₁, w₂⟩，wₐ = φₐ⁺·conj(φₐ⁻)。"""
    r = np.asarray(rho, dtype=np.float64)
    m1, p1, m2, p2 = (r[..., k, :] for k in range(4))
    w1 = oct_mul(p1, oct_conj(m1))
    w2 = oct_mul(p2, oct_conj(m2))
    return oct_norm2(m1) * oct_norm2(p2) + oct_norm2(m2) * oct_norm2(p1) - 2.0 * oct_inner(w1, w2)


def det_rho(rho: Rho | Any) -> float:
    return float(det_array(rho_array(rho)))


def det_by_lorentz(rho: Rho) -> float:
    """−½·L(f₁₁, f₂₂)."""
    return -0.5 * lorentz_form(q_map(rho.psi1), q_map(rho.psi2))


def mu_quadratic(rho: Rho) -> float:
    """L(f₁₁,f₂₂) − L(f₁₂,f₂₁) = −3·det ρ."""
    f11, f22 = q_map(rho.psi1), q_map(rho.psi2)
    f12 = f_ab(rho.psi1, rho.psi2)
    return lorentz_form(f11, f22) - lorentz_form(f12, f12)


def mu_null(rho: Rho) -> float:
    """L(Q(ψ₁), Q(ψ₂)) = −2·det ρ."""
    return lorentz_form(q_map(rho.psi1), q_map(rho.psi2))


def mu(rho: Rho) -> float:
    return mu_quadratic(rho)


def mu_conventions(rho: Rho) -> dict[str, float]:
    return {
        "det": det_rho(rho),
        "mu_quadratic": mu_quadratic(rho),
        "mu_null": mu_null(rho),
    }


def polarization_array(x1: Any, x2: Any, x3: Any, x4: Any) -> NDArray[np.float64] | float:
    # M = (1/384)·Σ ε₁ε₂ε₃ε₄·det(Σ εᵢxᵢ)，det 为偶函数，只取 ε₁ = +1 的一半
    x1, x2, x3, x4 = (np.asarray(x, dtype=np.float64) for x in (x1, x2, x3, x4))
    total: Any = 0.0
    for s2, s3, s4 in product((1.0, -1.0), repeat=3):
        total = total + s2 * s3 * s4 * det_array(x1 + s2 * x2 + s3 * x3 + s4 * x4)
    return total / 192.0


def quartic_polarization(r1: Rho | Any, r2: Rho | Any, r3: Rho | Any, r4: Rho | Any) -> float:
    return float(polarization_array(rho_array(r1), rho_array(r2), rho_array(r3), rho_array(r4)))


def right_multiply(rho: Rho, p: Any) -> Rho:
    """(ψ₁, ψ₂)·P = (P₁₁ψ₁ + P₂₁ψ₂, P₁₂ψ₁ + P₂₂ψ₂)."""
    p = np.asarray(p, dtype=np.float64).reshape(2, 2)
    psi1 = rho.psi1.scaled(p[0, 0]) + rho.psi2.scaled(p[1, 0])
    psi2 = rho.psi1.scaled(p[0, 1]) + rho.psi2.scaled(p[1, 1])
    return Rho(psi1, psi2)


def reference_rho() -> Rho:
    arr = np.zeros((4, 8))
    arr[0, 0] = arr[3, 0] = 1.0
    return Rho.from_array(arr)
