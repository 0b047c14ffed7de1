# (v⊗ε)ρ = (−v·ψ₂, v·ψ₁)：类时 v 经 ε 读成余向量，类空 v 经对称交换

from __future__ import annotations

from typing import Any

import numpy as np
from numpy.typing import NDArray

from octoline.algebra.lorentz import TIMELIKE_UNIT, clifford_action_array, lorentz_form
from octoline.config import DUALITY_KAPPA, Tolerances
from octoline.errors import DomainError, PreconditionError
from octoline.invariants.determinant import reference_rho, rho_array
from octoline.invariants.metric import TANGENT_BASIS, check_regular, grad_det, hessian_det
from octoline.models import PRIMAL, LorentzVector, Rho
from octoline.numerics import null_space


def _check_vector(v: LorentzVector, tol: float) -> float:
    norm2 = lorentz_form(v, v)
    if abs(norm2) <= tol * max(v.norm() ** 2, 1e-300):
        raise DomainError("v 必须是非零的非零模 Lorentz 向量（类时或类空）")
    return norm2


def covector_array(rho: Any, v: LorentzVector, timelike: bool) -> NDArray[np.float64]:
    r = np.asarray(rho, dtype=np.float64)
    z1 = -clifford_action_array(v, r[..., 2:4, :], PRIMAL)
    z2 = clifford_action_array(v, r[..., 0:2, :], PRIMAL)
    sign = -1.0 if timelike else 1.0
    h = np.stack([z2[..., 1, :], z2[..., 0, :], sign * z1[..., 1, :], sign * z1[..., 0, :]], axis=-2)
    return h.reshape(h.shape[:-2] + (32,))


def duality_covector(rho: Rho | Any, v: LorentzVector, tolerances: Tolerances | None = None) -> NDArray[np.float64]:
    tol = tolerances or Tolerances()
    timelike = _check_vector(v, tol.lorentz) < 0
    return covector_array(rho_array(rho), v, timelike)


def duality_residual(
    rho: Rho | Any,
    v: LorentzVector,
    kappa: float = DUALITY_KAPPA,
    tolerances: Tolerances | None = None,
) -> float:
    """‖ρ̂ − κ·(v⊗ε)ρ‖"""
    tol = tolerances or Tolerances()
    check_regular(rho, tol.singular_floor)
    return float(np.linalg.norm(grad_det(rho) - kappa * duality_covector(rho, v, tol)))


def duality_operator(v: LorentzVector, tolerances: Tolerances | None = None) -> NDArray[np.float64]:
    """(v⊗ε)ρ = K·vec(ρ)"""
    tol = tolerances or Tolerances()
    timelike = _check_vector(v, tol.lorentz) < 0
    return covector_array(TANGENT_BASIS, v, timelike).T


def duality_jacobian(
    rho: Rho | Any,
    v: LorentzVector,
    kappa: float = DUALITY_KAPPA,
    tolerances: Tolerances | None = None,
) -> NDArray[np.float64]:
    return hessian_det(rho) - kappa * duality_operator(v, tolerances)


def locus_tangent_basis(
    rho: Rho | Any,
    v: LorentzVector,
    kappa: float = DUALITY_KAPPA,
    tolerances: Tolerances | None = None,
) -> NDArray[np.float64]:
    tol = tolerances or Tolerances()
    residual = duality_residual(rho, v, kappa, tol)
    scale = max(1.0, float(np.linalg.norm(grad_det(rho))))
    if residual > tol.normalization * scale:
        raise PreconditionError(f"ρ 不在对偶方程的解集上，残差 {residual:.3e}")
    constraints = np.vstack([duality_jacobian(rho, v, kappa, tol), grad_det(rho)[None, :]])
    return null_space(constraints, rel_tol=tol.normalization)


def calibrate_kappa(rho: Rho | None = None, v: LorentzVector = TIMELIKE_UNIT) -> float:
    # ρ̂ = κ·(v⊗ε)ρ 的最小二乘 κ
    rho = reference_rho() if rho is None else rho
    h = duality_covector(rho, v)
    return float(np.dot(h, grad_det(rho)) / np.dot(h, h))
