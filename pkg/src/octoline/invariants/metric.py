from __future__ import annotations

from typing import Any

import numpy as np
from numpy.typing import NDArray

from octoline.config import Tolerances
from octoline.errors import SingularPointError
from octoline.invariants.determinant import det_rho, polarization_array, rho_array
from octoline.models import OctMatrix2, Rho

# 32 个坐标方向，形状 (32, 4, 8)
TANGENT_BASIS = np.eye(32).reshape(32, 4, 8)


def grad_det(rho: Rho | Any) -> NDArray[np.float64]:
    """dρ ↦ 4·M(ρ,ρ,ρ,dρ)"""
    r = rho_array(rho)
    return 4.0 * polarization_array(r, r, r, TANGENT_BASIS)


def hessian_det(rho: Rho | Any) -> NDArray[np.float64]:
    r = rho_array(rho)
    h = 12.0 * polarization_array(r, r, TANGENT_BASIS[:, None], TANGENT_BASIS[None, :])
    return 0.5 * (h + h.T)


def check_regular(rho: Rho | Any, floor: float | None = None) -> float:
    floor = Tolerances().singular_floor if floor is None else floor
    r = rho_array(rho)
    value = det_rho(r)
    scale = float(np.sum(r**2)) ** 2
    if abs(value) < floor * scale or value == 0.0:
        raise SingularPointError(f"det ρ = {value:.3e} 低于阈值 {floor:.1e}·‖ρ‖⁴")
    return value


def hessian_log_det(rho: Rho | Any, floor: float | None = None) -> NDArray[np.float64]:
    """∇² log det = ∇²det/det − d det ⊗ d det/det²."""
    value = check_regular(rho, floor)
    g = grad_det(rho)
    return hessian_det(rho) / value - np.outer(g, g) / value**2


def closed_form_hessian_at_identity() -> NDArray[np.float64]:
    """ρ₀ 处 ∇²det = 2[aā + dd̄ + 4Re(a)Re(d) − 2Re(b·c)]"""
    a, b, c, d = (slice(8 * k, 8 * k + 8) for k in range(4))
    h = np.zeros((32, 32))
    h[a, a] = 2.0 * np.eye(8)
    h[d, d] = 2.0 * np.eye(8)
    h[0, 24] = h[24, 0] = 4.0
    # Re(b·c) = b₀c₀ − Σᵢ bᵢcᵢ
    cross = np.diag([-2.0] + [2.0] * 7)
    h[b, c] = cross
    h[c, b] = cross
    return h


def trace_form(tangent: OctMatrix2) -> float:
    """2(Σᵢ tr Aᵢ² − tr A₀²)，A = A₀ + Σ Aᵢeᵢ"""
    blocks = np.stack([tangent.a, tangent.b, tangent.c, tangent.d], axis=-1).reshape(8, 2, 2)
    traces = np.einsum("kij,kji->k", blocks, blocks)
    return float(2.0 * (np.sum(traces[1:]) - traces[0]))
