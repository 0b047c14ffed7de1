from __future__ import annotations

from typing import Any, Literal

import numpy as np
from numpy.typing import NDArray

from octoline.config import AppConfig
from octoline.errors import PreconditionError
from octoline.invariants.determinant import rho_array
from octoline.invariants.duality import locus_tangent_basis
from octoline.invariants.embedding import restrict_to_subalgebra, standard_subalgebra, subalgebra_tangent_vectors
from octoline.invariants.metric import grad_det, hessian_log_det
from octoline.models import LorentzVector, QuaternionSubalgebra, Rho
from octoline.numerics import intersect, null_space, restricted_eigenvalues, sign_counts

Subspace = Literal["sl2o", "su2o", "su11o", "sl2h"]
SUBSPACES: tuple[str, ...] = ("sl2o", "su2o", "su11o", "sl2h")


def tangent_basis(
    rho: Rho | Any,
    subspace: str,
    sub: QuaternionSubalgebra | None = None,
    config: AppConfig | None = None,
) -> NDArray[np.float64]:
    cfg = config or AppConfig()
    r = rho_array(rho)
    level = null_space(grad_det(r)[None, :])
    if subspace == "sl2o":
        return level
    if subspace in ("su2o", "su11o"):
        a, c = cfg.duality.timelike if subspace == "su2o" else cfg.duality.spacelike
        v = LorentzVector(a, np.zeros(8), c)
        return locus_tangent_basis(r, v, cfg.duality.kappa, cfg.tolerances)
    if subspace == "sl2h":
        sub = sub or standard_subalgebra()
        # ρ 必须落在 SL(2,𝐇) 里，否则该切空间无意义
        restrict_to_subalgebra(sub, rho if isinstance(rho, Rho) else Rho.from_array(r))
        vectors = subalgebra_tangent_vectors(sub)
        return intersect(vectors, level)
    raise PreconditionError(f"未知子空间 {subspace}，可选: {', '.join(SUBSPACES)}")


def restricted_spectrum(
    rho: Rho | Any,
    subspace: str,
    sub: QuaternionSubalgebra | None = None,
    config: AppConfig | None = None,
) -> NDArray[np.float64]:
    cfg = config or AppConfig()
    form = hessian_log_det(rho, cfg.tolerances.singular_floor)
    return restricted_eigenvalues(form, tangent_basis(rho, subspace, sub, cfg))


def restricted_signature(
    rho: Rho | Any,
    subspace: str,
    sub: QuaternionSubalgebra | None = None,
    config: AppConfig | None = None,
) -> tuple[int, int, int]:
    cfg = config or AppConfig()
    eig = restricted_spectrum(rho, subspace, sub, cfg)
    return sign_counts(eig, cfg.tolerances.zero_eigen_ratio)
