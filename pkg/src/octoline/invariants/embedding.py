from __future__ import annotations

import numpy as np
from numpy.typing import NDArray

from octoline.algebra.octonion import basis, quaternion_subalgebra
from octoline.algebra.quaternion import qdet
from octoline.errors import PreconditionError
from octoline.invariants.determinant import mu
from octoline.models import QMat2, QuaternionSubalgebra, Rho

# 四元数矩阵 [[a, b], [c, d]] 的列就是 ρ 的两个扭量
_ROW_OF_ENTRY = {"a": 0, "c": 1, "b": 2, "d": 3}


def standard_subalgebra() -> QuaternionSubalgebra:
    return quaternion_subalgebra(basis(1), basis(2))


def sl2h_embed(sub: QuaternionSubalgebra, m: QMat2) -> Rho:
    frame = sub.matrix()
    rows = np.zeros((4, 8))
    for name, row in _ROW_OF_ENTRY.items():
        rows[row] = getattr(m, name) @ frame
    return Rho.from_array(rows)


def restrict_to_subalgebra(sub: QuaternionSubalgebra, rho: Rho, tol: float = 1e-10) -> QMat2:
    frame = sub.matrix()
    rows = rho.as_array()
    coords = rows @ frame.T
    leftover = float(np.max(np.linalg.norm(rows - coords @ frame, axis=1)))
    if leftover > tol * max(1.0, float(np.max(np.abs(rows)))):
        raise PreconditionError(f"ρ 的矩阵元不在该四元数子代数中，偏差 {leftover:.3e}")
    entries = np.zeros((4, 4))
    for name, row in _ROW_OF_ENTRY.items():
        entries["abcd".index(name)] = coords[row]
    return QMat2(entries)


def subalgebra_tangent_vectors(sub: QuaternionSubalgebra) -> NDArray[np.float64]:
    # 32×16：每个矩阵元位置依次填入 sub 的每个基元
    frame = sub.matrix()
    cols = []
    for slot in range(4):
        for element in frame:
            v = np.zeros((4, 8))
            v[slot] = element
            cols.append(v.reshape(32))
    return np.stack(cols, axis=1)


def mu_vs_qdet(m: QMat2, sub: QuaternionSubalgebra | None = None) -> tuple[float, float]:
    sub = standard_subalgebra() if sub is None else sub
    return mu(sl2h_embed(sub, m)), qdet(m)
