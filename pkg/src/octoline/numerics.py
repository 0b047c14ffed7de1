from __future__ import annotations

from typing import Any

import numpy as np
from numpy.typing import NDArray

from octoline.errors import PreconditionError


def sign_counts(eigenvalues: Any, zero_ratio: float = 1e-8) -> tuple[int, int, int]:
    """(正, 负, 零) 特征值个数；|λ| ≤ zero_ratio·max|λ| 记为零。"""
    eig = np.asarray(eigenvalues, dtype=np.float64)
    if eig.size == 0:
        return (0, 0, 0)
    cut = zero_ratio * float(np.max(np.abs(eig)))
    pos = int(np.sum(eig > cut))
    neg = int(np.sum(eig < -cut))
    return pos, neg, int(eig.size - pos - neg)


def null_space(a: Any, rel_tol: float = 1e-10) -> NDArray[np.float64]:
    a = np.atleast_2d(np.asarray(a, dtype=np.float64))
    _, s, vt = np.linalg.svd(a)
    top = float(s[0]) if s.size else 0.0
    rank = int(np.sum(s > rel_tol * top)) if top > 0 else 0
    return vt[rank:].T.copy()


def orthonormalize(vectors: Any, rel_tol: float = 1e-10) -> NDArray[np.float64]:
    v = np.asarray(vectors, dtype=np.float64)
    u, s, _ = np.linalg.svd(v, full_matrices=False)
    top = float(s[0]) if s.size else 0.0
    rank = int(np.sum(s > rel_tol * top)) if top > 0 else 0
    return u[:, :rank].copy()


def intersect(basis_a: Any, basis_b: Any, tol: float = 1e-8) -> NDArray[np.float64]:
    a = orthonormalize(basis_a)
    b = orthonormalize(basis_b)
    if a.shape[1] == 0 or b.shape[1] == 0:
        return np.zeros((a.shape[0], 0))
    # x = a·y 落在 span(b) 中当且仅当 (I − b bᵀ)·a·y = 0；奇异值即主角的正弦
    residual = a - b @ (b.T @ a)
    _, s, vt = np.linalg.svd(residual, full_matrices=True)
    s = np.concatenate([s, np.zeros(vt.shape[0] - s.size)])
    coeffs = vt[s <= tol].T
    return a @ coeffs


def restricted_eigenvalues(form: Any, basis: Any) -> NDArray[np.float64]:
    b = np.asarray(basis, dtype=np.float64)
    if b.ndim != 2 or b.shape[1] == 0:
        raise PreconditionError("子空间为空，无法限制双线性形式")
    m = b.T @ np.asarray(form, dtype=np.float64) @ b
    return np.linalg.eigvalsh(0.5 * (m + m.T))
