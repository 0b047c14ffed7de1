from __future__ import annotations

import logging

import numpy as np

from octoline.algebra.octonion import basis, oct_inv, oct_mul
from octoline.algebra.twistor import act_rho, zero_point
from octoline.config import Tolerances
from octoline.errors import DomainError, PreconditionError, SingularPointError
from octoline.invariants.determinant import right_multiply
from octoline.invariants.metric import check_regular
from octoline.models import (
    ConformalGenerator,
    ConformalWord,
    Dilation,
    Inversion,
    NormalForm,
    Reflection,
    Rho,
    Translation,
    Vector8,
)

logger = logging.getLogger(__name__)

# 反演后补一个反射，使字长保持偶数、扭量回到 primal
_PARITY_FIX = Reflection(basis(1))


def _translation(t: Vector8) -> list[ConformalGenerator]:
    return [Translation(t)] if np.any(t) else []


def _zeros(rho: Rho, tol: Tolerances) -> tuple[Vector8 | None, Vector8 | None]:
    return zero_point(rho.psi1, tol), zero_point(rho.psi2, tol)


def normalizing_word(rho: Rho, tolerances: Tolerances | None = None) -> ConformalWord:
    """ψ₁ 的零点送到 0，ψ₂ 的零点送到 ∞。"""
    tol = tolerances or Tolerances()
    p1, p2 = _zeros(rho, tol)
    if p1 is None and p2 is None:
        raise SingularPointError("ψ₁ 与 ψ₂ 的零点都在 ∞，det ρ = 0")
    if p2 is None:
        return ConformalWord(tuple(_translation(p1)))
    prefix = ConformalWord()
    if float(np.linalg.norm(p2)) > 1.0:
        # 先反演把远处的零点拉到单位球内，只用小向量平移
        prefix = ConformalWord((Inversion(), _PARITY_FIX))
        rho = act_rho(prefix, rho)
        p1, p2 = _zeros(rho, tol)
        if p2 is None:
            return prefix + ConformalWord(tuple(_translation(p1)))
    head = ConformalWord((*_translation(p2), Inversion(), _PARITY_FIX))
    if p1 is None:
        return prefix + head
    q = zero_point(act_rho(head, rho).psi1, tol)
    if q is None:
        raise SingularPointError("ψ₁ 与 ψ₂ 的零点重合，det ρ = 0")
    return prefix + head + ConformalWord(tuple(_translation(q)))


def normalize(rho: Rho, tolerances: Tolerances | None = None) -> NormalForm:
    tol = tolerances or Tolerances()
    value = check_regular(rho, tol.singular_floor)
    word = normalizing_word(rho, tol)
    moved = act_rho(word, rho)
    p = np.diag([1.0 / moved.psi1.phi_minus.norm(), 1.0 / moved.psi2.phi_plus.norm()])
    form = NormalForm(word, p, right_multiply(moved, p))
    residual = normal_form_residual(form)
    logger.debug("normalize: det=%.6e, word 长度 %d, 残差 %.3e", value, len(word), residual)
    if residual > tol.normalization:
        raise DomainError(f"正规形残差 {residual:.3e} 超过容差 {tol.normalization:.1e}")
    return form


def normal_form_residual(form: NormalForm) -> float:
    r = form.rho
    return max(
        r.psi1.phi_plus.norm(),
        r.psi2.phi_minus.norm(),
        abs(r.psi1.phi_minus.norm() - 1.0),
        abs(r.psi2.phi_plus.norm() - 1.0),
    )


def replay(rho: Rho, form: NormalForm) -> Rho:
    return right_multiply(act_rho(form.word, rho), form.p)


def centering_word(rho: Rho, tolerances: Tolerances | None = None) -> ConformalWord:
    """两个零点摆成对径点 (0, ∞) 或 (u, −u)，|u| = 1。"""
    tol = tolerances or Tolerances()
    p1, p2 = _zeros(rho, tol)
    if p1 is None and p2 is None:
        raise SingularPointError("ψ₁ 与 ψ₂ 的零点都在 ∞，det ρ = 0")
    if p1 is None or p2 is None:
        finite = p2 if p1 is None else p1
        return ConformalWord(tuple(_translation(finite)))
    mid = 0.5 * (p1 + p2)
    half = 0.5 * float(np.linalg.norm(p1 - p2))
    if half == 0.0:
        raise SingularPointError("ψ₁ 与 ψ₂ 的零点重合，det ρ = 0")
    # 伸缩参数 λ 把零点 p 送到 p/λ
    return ConformalWord((*_translation(mid), Dilation(half)))


def retract(rho: Rho, tolerances: Tolerances | None = None) -> Rho:
    tol = tolerances or Tolerances()
    if check_regular(rho, tol.singular_floor) <= 0:
        raise DomainError("retract 需要 det ρ > 0")
    moved = act_rho(centering_word(rho, tol), rho)
    scales = [np.sqrt(psi.phi_minus.norm() ** 2 + psi.phi_plus.norm() ** 2) for psi in (moved.psi1, moved.psi2)]
    return right_multiply(moved, np.diag([1.0 / scales[0], 1.0 / scales[1]]))


def sl2_generators_at(rho: Rho, s: float = 1.0, t: float = 2.0) -> list[tuple[str, ConformalWord, np.ndarray]]:
    """返回 (name, word, P)，act_rho(word, ρ) = ρ·P。"""
    if rho.psi1.phi_plus.norm() > 0 or rho.psi2.phi_minus.norm() > 0:
        raise PreconditionError("sl2_generators_at 只接受对角 ρ（φ₁⁺ = φ₂⁻ = 0）")
    m1 = rho.psi1.phi_minus.coords
    p2 = rho.psi2.phi_plus.coords
    upper = s * oct_mul(p2, oct_inv(m1))
    # ū = s·φ₁⁻·(φ₂⁺)⁻¹
    lower_bar = s * oct_mul(m1, oct_inv(p2))
    lower = lower_bar * np.array([1.0] + [-1.0] * 7)
    root = np.sqrt(t)
    return [
        ("lower", ConformalWord((Translation(upper),)), np.array([[1.0, 0.0], [s, 1.0]])),
        ("diagonal", ConformalWord((Dilation(t),)), np.diag([root, 1.0 / root])),
        (
            "upper",
            ConformalWord((Inversion(), Translation(lower), Inversion())),
            np.array([[-1.0, -s], [0.0, -1.0]]),
        ),
    ]
