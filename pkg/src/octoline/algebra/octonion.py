# 坐标 (c₀, …, c₇) 对应 (1, e₁, …, e₇)；𝐇 = span(1, e₁, e₂, e₃)，e₄ 为倍化单位，
# e₅ = e₁e₄，e₆ = e₂e₄，e₇ = e₃e₄。末轴长度为 8，前导轴广播

from __future__ import annotations

from typing import Any

import numpy as np
from numpy.typing import NDArray

from octoline.errors import DomainError, PreconditionError
from octoline.models import Octonion, QuaternionSubalgebra, as_oct

CONJ_SIGNS = np.array([1.0, -1.0, -1.0, -1.0, -1.0, -1.0, -1.0, -1.0])
ONE = np.eye(8)[0]


def _hamilton(p: NDArray[np.float64], q: NDArray[np.float64]) -> NDArray[np.float64]:
    a0, a1, a2, a3 = p
    b0, b1, b2, b3 = q
    return np.array(
        [
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ]
    )


def _qconj(p: NDArray[np.float64]) -> NDArray[np.float64]:
    return p * CONJ_SIGNS[:4]


def cayley_dickson_mul(x: Any, y: Any) -> Octonion:
    """(p,q)·(r,s) = (p·r − conj(s)·q, s·p + q·conj(r))"""
    x, y = as_oct(x), as_oct(y)
    p, q = x[:4], x[4:]
    r, s = y[:4], y[4:]
    return np.concatenate(
        [
            _hamilton(p, r) - _hamilton(_qconj(s), q),
            _hamilton(s, p) + _hamilton(q, _qconj(r)),
        ]
    )


def _build_table() -> NDArray[np.float64]:
    eye = np.eye(8)
    table = np.zeros((8, 8, 8))
    for i in range(8):
        for j in range(8):
            table[i, j] = cayley_dickson_mul(eye[i], eye[j])
    return table


# MULT_TABLE[i, j] = eᵢ·eⱼ
MULT_TABLE = _build_table()
_TABLE_64 = MULT_TABLE.reshape(64, 8)


def basis(i: int) -> Octonion:
    return np.eye(8)[i].copy()


def oct_mul(x: Any, y: Any) -> NDArray[np.float64]:
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    outer = x[..., :, None] * y[..., None, :]
    return outer.reshape(outer.shape[:-2] + (64,)) @ _TABLE_64


def oct_conj(x: Any) -> NDArray[np.float64]:
    return np.asarray(x, dtype=np.float64) * CONJ_SIGNS


def oct_norm2(x: Any) -> NDArray[np.float64] | float:
    return np.sum(np.asarray(x, dtype=np.float64) ** 2, axis=-1)


def oct_norm(x: Any) -> NDArray[np.float64] | float:
    return np.sqrt(oct_norm2(x))


def oct_inner(x: Any, y: Any) -> NDArray[np.float64] | float:
    """⟨x, y⟩ = Re(x·conj(y)) = Σ xᵢyᵢ."""
    return np.sum(np.asarray(x, dtype=np.float64) * np.asarray(y, dtype=np.float64), axis=-1)


def oct_inv(x: Any) -> Octonion:
    x = as_oct(x)
    n2 = float(oct_norm2(x))
    if n2 == 0.0:
        raise DomainError("零八元数不可逆")
    return oct_conj(x) / n2


def associator(x: Any, y: Any, z: Any) -> NDArray[np.float64]:
    return oct_mul(oct_mul(x, y), z) - oct_mul(x, oct_mul(y, z))


def quaternion_subalgebra(u: Any, v: Any, tol: float = 1e-10) -> QuaternionSubalgebra:
    u, v = as_oct(u), as_oct(v)
    for name, z in (("u", u), ("v", v)):
        if abs(float(oct_norm2(z)) - 1.0) > tol:
            raise PreconditionError(f"{name} 必须是单位八元数")
        if abs(z[0]) > tol:
            raise PreconditionError(f"{name} 必须是纯虚八元数")
    if abs(float(oct_inner(u, v))) > tol:
        raise PreconditionError("u 与 v 必须正交")
    return QuaternionSubalgebra((ONE.copy(), u, v, oct_mul(u, v)))


def subalgebra_closure_residual(sub: QuaternionSubalgebra) -> float:
    frame = sub.matrix()
    worst = 0.0
    for x in frame:
        for y in frame:
            xy = oct_mul(x, y)
            leftover = xy - frame.T @ (frame @ xy)
            worst = max(worst, float(np.linalg.norm(leftover)))
    return worst
