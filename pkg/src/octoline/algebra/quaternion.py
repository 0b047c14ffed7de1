# 四元数 (q₀, q₁, q₂, q₃) 对应 (1, i, j, k)，不经过八元数乘法表

from __future__ import annotations

from itertools import product
from typing import Any, Literal

import numpy as np
from numpy.typing import NDArray

from octoline.models import QMat2
from octoline.numerics import null_space, restricted_eigenvalues, sign_counts

ComplexAxis = Literal["i", "j"]

_Q_CONJ = np.array([1.0, -1.0, -1.0, -1.0])
# 轮换 i→j→k→i 是 𝐇 的自同构，用于换一个复结构做抽查
_AXIS_ORDER = {"i": [0, 1, 2, 3], "j": [0, 2, 3, 1]}


def q_mul(p: Any, q: Any) -> NDArray[np.float64]:
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    a0, a1, a2, a3 = (p[..., k] for k in range(4))
    b0, b1, b2, b3 = (q[..., k] for k in range(4))
    return np.stack(
        [
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ],
        axis=-1,
    )


def q_conj(q: Any) -> NDArray[np.float64]:
    return np.asarray(q, dtype=np.float64) * _Q_CONJ


def q_norm2(q: Any) -> NDArray[np.float64] | float:
    return np.sum(np.asarray(q, dtype=np.float64) ** 2, axis=-1)


def qmat_mul(m: QMat2, n: QMat2) -> QMat2:
    return QMat2(
        np.stack(
            [
                q_mul(m.a, n.a) + q_mul(m.b, n.c),
                q_mul(m.a, n.b) + q_mul(m.b, n.d),
                q_mul(m.c, n.a) + q_mul(m.d, n.c),
                q_mul(m.c, n.b) + q_mul(m.d, n.d),
            ]
        )
    )


def qmat_identity() -> QMat2:
    entries = np.zeros((4, 4))
    entries[0, 0] = entries[3, 0] = 1.0
    return QMat2(entries)


def embed_quaternion(q: Any, axis: ComplexAxis = "i") -> NDArray[np.complex128]:
    """q = α + βj ↦ [[α, β], [−β̄, ᾱ]]."""
    q = np.asarray(q, dtype=np.float64)[_AXIS_ORDER[axis]]
    alpha = complex(q[0], q[1])
    beta = complex(q[2], q[3])
    return np.array([[alpha, beta], [-beta.conjugate(), alpha.conjugate()]], dtype=np.complex128)


def embed_complex(m: QMat2, axis: ComplexAxis = "i") -> NDArray[np.complex128]:
    out = np.zeros((4, 4), dtype=np.complex128)
    for (row, col), q in zip(product(range(2), range(2)), (m.a, m.b, m.c, m.d)):
        out[2 * row : 2 * row + 2, 2 * col : 2 * col + 2] = embed_quaternion(q, axis)
    return out


def complex_determinant(m: QMat2, axis: ComplexAxis = "i") -> complex:
    return complex(np.linalg.det(embed_complex(m, axis)))


def cdet_oracle(m: QMat2, axis: ComplexAxis = "i") -> float:
    return complex_determinant(m, axis).real


def qdet_array(entries: Any) -> NDArray[np.float64] | float:
    """|a|²|d|² + |b|²|c|² − 2Re(a·c̄·d·b̄)"""
    e = np.asarray(entries, dtype=np.float64)
    a, b, c, d = (e[..., k, :] for k in range(4))
    cross = q_mul(q_mul(q_mul(a, q_conj(c)), d), q_conj(b))[..., 0]
    return q_norm2(a) * q_norm2(d) + q_norm2(b) * q_norm2(c) - 2.0 * cross


def qdet(m: QMat2) -> float:
    return float(qdet_array(m.entries))


def charpoly_imag_residual(m: QMat2, axis: ComplexAxis = "i") -> float:
    coeffs = np.poly(embed_complex(m, axis))
    return float(np.max(np.abs(np.imag(coeffs))))


def _qdet_polarization(x1: Any, x2: Any, x3: Any, x4: Any) -> NDArray[np.float64]:
    total = 0.0
    for s2, s3, s4 in product((1.0, -1.0), repeat=3):
        total = total + s2 * s3 * s4 * qdet_array(x1 + s2 * x2 + s3 * x3 + s4 * x4)
    return total / 192.0


def qdet_log_hessian(m: QMat2) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    x = m.entries
    basis = np.eye(16).reshape(16, 4, 4)
    value = qdet(m)
    grad = 4.0 * _qdet_polarization(x, x, x, basis)
    hess = 12.0 * _qdet_polarization(x, x, basis[:, None], basis[None, :])
    return grad, hess / value - np.outer(grad, grad) / value**2


def qdet_log_signature(m: QMat2 | None = None, zero_ratio: float = 1e-8) -> tuple[int, int, int]:
    m = qmat_identity() if m is None else m
    grad, hess = qdet_log_hessian(m)
    return sign_counts(restricted_eigenvalues(hess, null_space(grad[None, :])), zero_ratio)
