# R^{9,1}：f = a‖x‖² + (x,b) + c，L(f,f) = (b,b) − 4ac

from __future__ import annotations

from typing import Any

import numpy as np
from numpy.typing import NDArray

from octoline.algebra.triality import clifford_array
from octoline.models import (
    DUAL,
    MINUS,
    PLUS,
    PRIMAL,
    ConformalGenerator,
    ConformalWord,
    Dilation,
    Inversion,
    LorentzVector,
    Reflection,
    Translation,
    Twistor,
)

# L 在 (a, b₁..b₈, c) 坐标下的 Gram 矩阵
LORENTZ_GRAM = np.zeros((10, 10))
LORENTZ_GRAM[1:9, 1:9] = np.eye(8)
LORENTZ_GRAM[0, 9] = LORENTZ_GRAM[9, 0] = -2.0

TIMELIKE_UNIT = LorentzVector(1.0, np.zeros(8), 1.0)
SPACELIKE_UNIT = LorentzVector(-1.0, np.zeros(8), 1.0)


def lorentz_form(f: LorentzVector, g: LorentzVector) -> float:
    return float(np.dot(f.b, g.b) - 2.0 * f.a * g.c - 2.0 * g.a * f.c)


def lorentz_form_array(f: Any, g: Any) -> NDArray[np.float64] | float:
    f = np.asarray(f, dtype=np.float64)
    g = np.asarray(g, dtype=np.float64)
    return np.einsum("...i,ij,...j->...", f, LORENTZ_GRAM, g)


def lorentz_basis() -> list[LorentzVector]:
    return [LorentzVector.from_array(row) for row in np.eye(10)]


def vector_action(g: ConformalGenerator, f: LorentzVector) -> LorentzVector:
    a, b, c = f.a, f.b, f.c
    if isinstance(g, Translation):
        # f ↦ f(x + t)
        t = g.t
        return LorentzVector(a, b + 2.0 * a * t, a * float(t @ t) + float(t @ b) + c)
    if isinstance(g, Reflection):
        return LorentzVector(a, b - 2.0 * float(b @ g.n) * g.n, c)
    if isinstance(g, Inversion):
        return LorentzVector(c, b, a)
    if isinstance(g, Dilation):
        return LorentzVector(g.lam * a, b, c / g.lam)
    raise TypeError(f"未知的共形生成元: {g!r}")


def vector_action_word(word: ConformalWord, f: LorentzVector) -> LorentzVector:
    for g in word.generators:
        f = vector_action(g, f)
    return f


def clifford_action_array(f: LorentzVector, psi: Any, duality: str) -> NDArray[np.float64]:
    """(φ⁻, φ⁺) ↦ (b·φ⁻ − 2aφ⁺, −(b·φ⁺ + 2cφ⁻))"""
    psi = np.asarray(psi, dtype=np.float64)
    phi_minus, phi_plus = psi[..., 0, :], psi[..., 1, :]
    minus_ch, plus_ch = (MINUS, PLUS) if duality == PRIMAL else (PLUS, MINUS)
    new_minus = clifford_array(f.b, phi_minus, minus_ch) - 2.0 * f.a * phi_plus
    new_plus = -(clifford_array(f.b, phi_plus, plus_ch) + 2.0 * f.c * phi_minus)
    return np.stack([new_minus, new_plus], axis=-2)


def clifford_action(f: LorentzVector, psi: Twistor) -> Twistor:
    out = clifford_action_array(f, psi.as_array(), psi.duality)
    return Twistor.from_array(out, DUAL if psi.duality == PRIMAL else PRIMAL)
