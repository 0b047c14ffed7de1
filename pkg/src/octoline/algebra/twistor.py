from __future__ import annotations

from typing import Any

import numpy as np
from numpy.typing import NDArray

from octoline.algebra.lorentz import lorentz_form
from octoline.algebra.octonion import oct_conj, oct_inner, oct_inv, oct_mul, oct_norm2
from octoline.algebra.triality import clifford, pair_array
from octoline.config import Tolerances
from octoline.errors import ChiralityError, DomainError
from octoline.models import (
    DUAL,
    PRIMAL,
    ConformalGenerator,
    ConformalWord,
    Dilation,
    Duality,
    Inversion,
    LorentzVector,
    PointS8,
    Reflection,
    Rho,
    Spinor,
    Translation,
    Twistor,
    Vector8,
    as_oct,
)


def flip(duality: Duality) -> Duality:
    return DUAL if duality == PRIMAL else PRIMAL


def evaluate(psi: Twistor, x: Any) -> Spinor:
    if psi.duality != PRIMAL:
        raise ChiralityError("只能在 primal 扭量上求值 ψ(x) = x·φ⁻ + φ⁺")
    return clifford(as_oct(x), psi.phi_minus) + psi.phi_plus


def act(g: ConformalGenerator, psi: Twistor) -> Twistor:
    phi_minus, phi_plus = psi.phi_minus, psi.phi_plus
    if isinstance(g, Translation):
        return Twistor(psi.duality, phi_minus, clifford(g.t, phi_minus) + phi_plus)
    if isinstance(g, Reflection):
        return Twistor(flip(psi.duality), -clifford(g.n, phi_minus), clifford(g.n, phi_plus))
    if isinstance(g, Inversion):
        return Twistor(flip(psi.duality), phi_plus, -phi_minus)
    if isinstance(g, Dilation):
        root = np.sqrt(g.lam)
        return Twistor(psi.duality, phi_minus.scaled(root), phi_plus.scaled(1.0 / root))
    raise TypeError(f"未知的共形生成元: {g!r}")


def act_word(word: ConformalWord, psi: Twistor) -> Twistor:
    for g in word.generators:
        psi = act(g, psi)
    return psi


def act_rho(word: ConformalWord | ConformalGenerator, rho: Rho) -> Rho:
    if not isinstance(word, ConformalWord):
        word = ConformalWord((word,))
    return Rho(act_word(word, rho.psi1), act_word(word, rho.psi2))


def w_array(phi_minus: Any, phi_plus: Any, duality: Duality) -> NDArray[np.float64]:
    """(x, w) = ⟨x·φ⁻, φ⁺⟩"""
    if duality == PRIMAL:
        return pair_array(phi_plus, phi_minus)
    return -oct_mul(phi_minus, oct_conj(phi_plus))


def bilinear_array(psi_a: Any, psi_b: Any, duality: Duality = PRIMAL) -> NDArray[np.float64]:
    """(⟨φₐ⁻,φᵦ⁻⟩, w(φₐ⁻,φᵦ⁺) + w(φᵦ⁻,φₐ⁺), ⟨φₐ⁺,φᵦ⁺⟩)"""
    psi_a = np.asarray(psi_a, dtype=np.float64)
    psi_b = np.asarray(psi_b, dtype=np.float64)
    am, ap = psi_a[..., 0, :], psi_a[..., 1, :]
    bm, bp = psi_b[..., 0, :], psi_b[..., 1, :]
    a = oct_inner(am, bm)
    b = w_array(am, bp, duality) + w_array(bm, ap, duality)
    c = oct_inner(ap, bp)
    return np.concatenate([np.asarray(a)[..., None], b, np.asarray(c)[..., None]], axis=-1)


def null_vector(psi: Twistor) -> LorentzVector:
    return LorentzVector.from_array(bilinear_array(psi.as_array(), psi.as_array(), psi.duality))


def project(psi: Twistor) -> PointS8:
    if psi.is_zero():
        raise DomainError("零扭量没有对应的 S⁸ 点")
    return as_point(null_vector(psi))


def zero_point(psi: Twistor, tolerances: Tolerances | None = None) -> Vector8 | None:
    # None 表示零点在 ∞
    tol = tolerances or Tolerances()
    if psi.is_zero():
        raise DomainError("零扭量的零点无定义")
    m, p = psi.phi_minus.coords, psi.phi_plus.coords
    if np.sqrt(oct_norm2(m)) <= tol.infinity_ratio * np.sqrt(oct_norm2(p)):
        return None
    if psi.duality == PRIMAL:
        return -oct_mul(p, oct_inv(m))
    return oct_conj(oct_mul(p, oct_inv(m)))


def point_from_zero(c: Vector8 | None) -> PointS8:
    if c is None:
        return PointS8(LorentzVector(0.0, np.zeros(8), 1.0))
    c = as_oct(c)
    n2 = float(c @ c)
    return PointS8(LorentzVector(1.0, -2.0 * c, n2).scaled(1.0 / (1.0 + n2)))


def dual_pairing(chi: Twistor, psi: Twistor) -> float:
    """⟨(φ⁻,φ⁺),(χ,ω)⟩ = ⟨φ⁻,ω⟩ + ⟨φ⁺,χ⟩"""
    if chi.duality == psi.duality:
        raise ChiralityError("对偶配对需要一个 primal 扭量和一个 dual 扭量")
    return float(
        oct_inner(chi.phi_minus.coords, psi.phi_plus.coords)
        + oct_inner(chi.phi_plus.coords, psi.phi_minus.coords)
    )


def ray_distance(p: PointS8, q: PointS8) -> float:
    return float(np.linalg.norm(p.ray.as_array() - q.ray.as_array()))


def is_null(f: LorentzVector, tol: float = 1e-10) -> bool:
    return abs(lorentz_form(f, f)) <= tol * max(f.norm() ** 2, 1e-300)


def as_point(f: LorentzVector) -> PointS8:
    # 取 a + c > 0 的零射线，缩放到 a + c = 1
    total = f.a + f.c
    if total <= 0:
        raise DomainError("射线不在 S⁸ 的正半锥上")
    return PointS8(f.scaled(1.0 / total))
