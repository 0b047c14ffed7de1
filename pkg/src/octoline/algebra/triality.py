#   x·φ  = −conj(x)·φ     R⁸ × S⁺ → S⁻
#   x·ψ  = x·ψ            R⁸ × S⁻ → S⁺
#   φ·ψ  = φ·conj(ψ)      S⁺ × S⁻ → R⁸

from __future__ import annotations

from typing import Any

import numpy as np
from numpy.typing import NDArray

from octoline.algebra.octonion import oct_conj, oct_inner, oct_mul
from octoline.errors import ChiralityError
from octoline.models import MINUS, PLUS, Chirality, Spinor, as_oct


def v_on_plus_array(x: Any, phi: Any) -> NDArray[np.float64]:
    return -oct_mul(oct_conj(x), phi)


def v_on_minus_array(x: Any, psi: Any) -> NDArray[np.float64]:
    return oct_mul(x, psi)


def clifford_array(x: Any, spinor: Any, chirality: Chirality) -> NDArray[np.float64]:
    if chirality == PLUS:
        return v_on_plus_array(x, spinor)
    return v_on_minus_array(x, spinor)


def pair_array(phi: Any, psi: Any) -> NDArray[np.float64]:
    return oct_mul(phi, oct_conj(psi))


def _require(spinor: Spinor, chirality: Chirality) -> None:
    if spinor.chirality != chirality:
        raise ChiralityError(f"需要 S{chirality} 旋量，实际为 S{spinor.chirality}")


def cliff_v_on_plus(x: Any, phi: Spinor) -> Spinor:
    _require(phi, PLUS)
    return Spinor(MINUS, v_on_plus_array(as_oct(x), phi.coords))


def cliff_v_on_minus(x: Any, psi: Spinor) -> Spinor:
    _require(psi, MINUS)
    return Spinor(PLUS, v_on_minus_array(as_oct(x), psi.coords))


def clifford(x: Any, spinor: Spinor) -> Spinor:
    if spinor.chirality == PLUS:
        return cliff_v_on_plus(x, spinor)
    return cliff_v_on_minus(x, spinor)


def pair_spinors(phi: Spinor, psi: Spinor) -> NDArray[np.float64]:
    """⟨x, φ·ψ⟩ = ⟨x·ψ, φ⟩ = −⟨x·φ, ψ⟩"""
    _require(phi, PLUS)
    _require(psi, MINUS)
    return pair_array(phi.coords, psi.coords)


def triple_form(x: Any, phi: Spinor, psi: Spinor) -> float:
    # Re((x·ψ)·conj(φ))，单位三元组上取 1
    _require(phi, PLUS)
    _require(psi, MINUS)
    return float(oct_mul(v_on_minus_array(as_oct(x), psi.coords), oct_conj(phi.coords))[0])


def spinor_inner(phi: Spinor, psi: Spinor) -> float:
    if phi.chirality != psi.chirality:
        raise ChiralityError("内积只在同手性旋量之间定义")
    return float(oct_inner(phi.coords, psi.coords))
